import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from wscc.diagram import Cocone, Cone, Edge, LabeledDiagram, colimit_classical, limit_classical
from wscc.diagram import universal_cocone_oracle, universal_cone_oracle
from wscc.finset import (
    BoundaryError,
    FinFn,
    FinSetObj,
    coequalizer,
    compose_fn,
    coproduct,
    cotuple,
    equalizer,
    identity,
    product,
    pullback,
    pushout,
)

from oracles import all_maps, naive_classes, pushout_classes


def fn(table, cod, dom=None):
    return FinFn(table, cod, dom)


def parallel_pair(f: FinFn, g: FinFn) -> LabeledDiagram:
    return LabeledDiagram((f.dom, f.cod), (Edge(0, 1, f, "f"), Edge(0, 1, g, "g")))


@st.composite
def fn_pairs(draw, max_size=6):
    a = draw(st.integers(0, max_size))
    b = draw(st.integers(1 if a else 0, max_size))
    t = st.lists(st.integers(0, max(b - 1, 0)), min_size=a, max_size=a)
    return fn(draw(t), b, a), fn(draw(t), b, a)


# -- compose ----------------------------------------------------------------


def test_compose_examples():
    swap = fn([1, 0], 2)
    assert compose_fn(swap, swap).table == (0, 1)
    assert compose_fn(fn([0, 0], 1), fn([2], 3)).table == (2, 2)
    assert compose_fn(fn([2, 1, 0], 3), fn([0, 0, 1], 2)).table == (1, 0, 0)


def test_compose_boundary_error_names_both():
    with pytest.raises(BoundaryError, match=r"\[2\].*\[3\]"):
        compose_fn(fn([0, 1], 2), fn([0, 0, 0], 1))


def test_debug_print():
    assert str(fn([1, 0], 3)) == "[1,0]:[2]->[3]"


def test_fn_rejects_out_of_range():
    with pytest.raises(ValueError):
        fn([0, 3], 3)


# -- coproduct --------------------------------------------------------------


def test_coproduct_examples():
    s, i1, i2 = coproduct(0, 5)
    assert s.size == 5 and i2.table == identity(5).table
    s, i1, i2 = coproduct(2, 3)
    assert (s.size, i1.table, i2.table) == (5, (0, 1), (2, 3, 4))


def test_cotuple_unique():
    q = cotuple(fn([0, 0], 1), fn([0], 1))
    assert q.table == (0, 0, 0)
    # the only map [3] -> [1] restricting to both legs
    s, i1, i2 = coproduct(2, 1)
    fits = [m for m in all_maps(3, 1) if [m[x] for x in i1.table] == [0, 0] and [m[x] for x in i2.table] == [0]]
    assert fits == [q.table]


# -- coequalizer ------------------------------------------------------------


def test_coequalizer_examples():
    f = fn([0, 2, 1], 3)
    assert coequalizer(f, f).table == (0, 1, 2)
    assert coequalizer(fn([0, 1], 3), fn([1, 2], 3)).table == (0, 0, 0)
    assert coequalizer(fn([0], 4), fn([2], 4)).table == (0, 1, 0, 2)


def test_frozen_coequalizers_match_oracle():
    assert naive_classes(3, [(0, 1), (1, 2)]) == [0, 0, 0]
    assert naive_classes(4, [(0, 2)]) == [0, 1, 0, 2]


def _coeq_case(f, g):
    q = coequalizer(f, g)
    assert q.table == tuple(naive_classes(f.cod.size, list(zip(f.table, g.table))))
    assert compose_fn(f, q).table == compose_fn(g, q).table
    d = parallel_pair(f, g)
    c = Cocone(d, q.cod, (compose_fn(f, q), q))
    assert universal_cocone_oracle(d, c, q.cod.size + 1)


def test_coequalizer_exhaustive_small():
    for a in range(4):
        for b in range(4):
            if a and not b:
                continue
            maps = all_maps(a, b)
            for f, g in itertools.product(maps, repeat=2):
                _coeq_case(fn(f, b, a), fn(g, b, a))


def test_coequalizer_random_up_to_six():
    rng = random.Random(11)
    for _ in range(200):
        a, b = rng.randint(0, 6), rng.randint(1, 6)
        f = fn([rng.randrange(b) for _ in range(a)], b, a)
        g = fn([rng.randrange(b) for _ in range(a)], b, a)
        q = coequalizer(f, g)
        assert q.table == tuple(naive_classes(b, list(zip(f.table, g.table))))
        assert compose_fn(f, q).table == compose_fn(g, q).table
        d = parallel_pair(f, g)
        assert universal_cocone_oracle(d, Cocone(d, q.cod, (compose_fn(f, q), q)), min(q.cod.size + 1, 3))


@given(fn_pairs())
def test_coequalizer_deterministic(pair):
    f, g = pair
    assert coequalizer(f, g) == coequalizer(f, g)
    assert coequalizer(f, g).is_surjective()


def test_coequalizer_boundary_error():
    with pytest.raises(BoundaryError):
        coequalizer(fn([0], 2), fn([0, 1], 2))


# -- pushout ----------------------------------------------------------------


def test_pushout_examples():
    f = fn([1, 0, 2], 3)
    pb, pc = pushout(f, identity(3))
    assert pb.cod.size == 3 and pb.is_injective() and pb.is_surjective()
    assert compose_fn(f, pb).table == pc.table
    pb, pc = pushout(fn([0], 1), fn([0], 1))
    assert (pb.cod.size, pb.table, pc.table) == (1, (0,), (0,))
    pb, pc = pushout(fn([0, 1], 2), fn([0, 0], 1))
    assert pb.cod.size == 1 and pb.table == (0, 0)


def _pushout_universal(f, g, bound=3):
    pb, pc = pushout(f, g)
    d = LabeledDiagram((f.dom, f.cod, g.cod), (Edge(0, 1, f), Edge(0, 2, g)))
    leg0 = compose_fn(f, pb)
    assert leg0.table == compose_fn(g, pc).table
    assert list(pb.table) + list(pc.table) == pushout_classes(f.table, g.table, f.cod.size, g.cod.size)
    return universal_cocone_oracle(d, Cocone(d, pb.cod, (leg0, pb, pc)), bound)


def test_pushout_universal_exhaustive():
    for a, b, c in itertools.product(range(3), repeat=3):
        if a and not (b and c):
            continue
        for f in all_maps(a, b):
            for g in all_maps(a, c):
                assert _pushout_universal(fn(f, b, a), fn(g, c, a))


def test_pushout_universal_random():
    rng = random.Random(5)
    for _ in range(200):
        a, b, c = rng.randint(0, 3), rng.randint(1, 3), rng.randint(1, 3)
        f = fn([rng.randrange(b) for _ in range(a)], b, a)
        g = fn([rng.randrange(c) for _ in range(a)], c, a)
        assert _pushout_universal(f, g, bound=2)


# -- limits -----------------------------------------------------------------


def test_limit_examples():
    f = fn([0, 1, 1], 2)
    assert equalizer(f, f).table == (0, 1, 2)
    p, p1, p2 = product(2, 3)
    assert p.size == 6 and p1.table == (0, 0, 0, 1, 1, 1) and p2.table == (0, 1, 2, 0, 1, 2)
    e = equalizer(fn([0, 1, 1], 2), fn([0, 0, 1], 2))
    assert e.table == (0, 2) and e.cod.size == 3


def test_equalizer_pointwise_scan():
    rng = random.Random(2)
    for _ in range(200):
        a, b = rng.randint(0, 6), rng.randint(1, 4)
        f = [rng.randrange(b) for _ in range(a)]
        g = [rng.randrange(b) for _ in range(a)]
        assert list(equalizer(fn(f, b, a), fn(g, b, a)).table) == [x for x in range(a) if f[x] == g[x]]


def test_pullback_is_fibre_product():
    rng = random.Random(3)
    for _ in range(100):
        a, b, c = rng.randint(1, 3), rng.randint(0, 4), rng.randint(0, 4)
        f = fn([rng.randrange(a) for _ in range(b)], a, b)
        g = fn([rng.randrange(a) for _ in range(c)], a, c)
        pb, pc = pullback(f, g)
        want = [(x, y) for x in range(b) for y in range(c) if f.table[x] == g.table[y]]
        assert list(zip(pb.table, pc.table)) == want


def test_limit_universal_cones():
    rng = random.Random(4)
    for _ in range(40):
        a, b, c = rng.randint(1, 2), rng.randint(0, 3), rng.randint(0, 3)
        f = fn([rng.randrange(a) for _ in range(b)], a, b)
        g = fn([rng.randrange(a) for _ in range(c)], a, c)
        d = LabeledDiagram((FinSetObj(b), FinSetObj(c), FinSetObj(a)), (Edge(0, 2, f), Edge(1, 2, g)))
        cone = limit_classical(d)
        assert universal_cone_oracle(d, cone, 2)
        pb, pc = pullback(f, g)
        assert cone.apex.size == pb.dom.size


def test_product_universal():
    d = LabeledDiagram((FinSetObj(2), FinSetObj(3)))
    p, p1, p2 = product(2, 3)
    assert universal_cone_oracle(d, Cone(d, p, (p1, p2)), 3)
    bad = Cone(d, FinSetObj(1), (fn([0], 2), fn([0], 3)))
    assert not universal_cone_oracle(d, bad, 2)


# -- classical colimit and the oracle ---------------------------------------


def test_colimit_classical_examples():
    d = LabeledDiagram((FinSetObj(1), FinSetObj(2)))
    c = colimit_classical(d)
    assert c.apex.size == 3 and c.legs[0].table == (0,) and c.legs[1].table == (1, 2)
    pp = parallel_pair(fn([1, 2], 3), fn([0, 1], 3))
    assert colimit_classical(pp).apex.size == 1
    assert colimit_classical(LabeledDiagram(())).apex.size == 0


def test_oracle_accepts_colimits():
    rng = random.Random(9)
    from wscc.random_gen import rand_diagram

    checked = 0
    while checked < 60:
        d = rand_diagram(rng, max_vertices=3, max_size=3, max_edges=3)
        if d.total_size() > 6:
            continue
        checked += 1
        assert universal_cocone_oracle(d, colimit_classical(d), 4 if d.total_size() <= 5 else 3)


def test_oracle_rejects_bad_cocones():
    d = LabeledDiagram((FinSetObj(1),))
    big = Cocone(d, FinSetObj(2), (fn([0], 2),))
    assert not universal_cocone_oracle(d, big, 2)
    pp = parallel_pair(fn([1, 2], 3), fn([0, 1], 3))
    two = Cocone(pp, FinSetObj(2), (fn([0, 0], 2), fn([0, 0, 0], 2)))
    assert not universal_cocone_oracle(pp, two, 3)


@settings(max_examples=50)
@given(fn_pairs(max_size=3))
def test_coequalizer_universal_hypothesis(pair):
    _coeq_case(*pair)
