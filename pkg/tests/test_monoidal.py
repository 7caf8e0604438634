import random

import pytest

from wscc import cospan as cs
from wscc.diagram import colimit_classical
from wscc.finset import BoundaryError, FinFn, FinSetObj, pullback
from wscc.monoidal import (
    Arc,
    MonCocone,
    MonoidalDiagram,
    MonoidalDiagramCospan,
    feedback_cospan,
    feedback_diagram,
    mon_colim_functor,
    mon_colimit,
    mon_universal_cocone_oracle,
    trace_partial_fn,
)
from wscc.random_gen import rand_diagram, rand_feedback

from oracles import naive_classes


def orbits(a, b, c, f):
    pairs = [(x if x < a else x + b, a + y) for x, y in enumerate(f)]
    return naive_classes(a + b + c, pairs)


def iterate(a, b, c, f):
    """Follow f from each a, at most |C| + 1 steps inside C."""
    out = []
    for x in range(a):
        y = f[x]
        for _ in range(c + 1):
            if y < b:
                break
            y = f[a + y - b]
        out.append(y if y < b else None)
    return out


def test_length_one_words_agree_with_ordinary_colimits():
    rng = random.Random(0)
    for _ in range(100):
        d = rand_diagram(rng)
        m = MonoidalDiagram(d.objects, tuple(Arc((e.src,), (e.tgt,), e.fn) for e in d.edges))
        assert [l.table for l in mon_colimit(m).legs] == [l.table for l in colimit_classical(d).legs]


def test_no_arcs_is_sum():
    m = MonoidalDiagram((FinSetObj(2), FinSetObj(1)))
    assert mon_colimit(m).apex.size == 3


def test_single_orbit():
    m = feedback_diagram(1, 1, 1, FinFn([1, 0], 2)).center
    assert mon_colimit(m).apex.size == 1


def test_feedback_examples():
    f = FinFn([1, 0, 2], 3)
    assert cs.iso_eq(feedback_cospan(2, 3, 0, FinFn([1, 0], 3)), cs.lift(FinFn([1, 0], 3)))
    a = feedback_cospan(1, 1, 1, FinFn([1, 0], 2))
    assert (a.apex.size, a.legL.table, a.legR.table) == (1, (0,), (0,))
    t = feedback_cospan(1, 1, 1, FinFn([1, 1], 2))
    assert (t.apex.size, t.legL.table, t.legR.table) == (2, (0,), (1,))
    assert f.table == (1, 0, 2)


def test_trace_examples():
    assert trace_partial_fn(2, 3, 0, FinFn([2, 0], 3)) == [2, 0]
    assert trace_partial_fn(1, 1, 1, FinFn([1, 0], 2)) == [0]
    assert trace_partial_fn(1, 1, 1, FinFn([1, 1], 2)) == [None]


def test_feedback_boundary_error():
    with pytest.raises(BoundaryError):
        feedback_cospan(1, 1, 1, FinFn([0], 2))


def test_feedback_against_orbits_and_iteration():
    rng = random.Random(1)
    for _ in range(500):
        a, b, c, f = rand_feedback(rng, 3)
        cos = feedback_cospan(a, b, c, f)
        cls = orbits(a, b, c, f.table)
        assert cos.apex.size == max(cls, default=-1) + 1
        assert trace_partial_fn(a, b, c, f) == iterate(a, b, c, f.table)
        pa, pb = pullback(cos.legL, cos.legR)
        rel = sorted(zip(pa.table, pb.table))
        assert rel == [(x, y) for x, y in enumerate(trace_partial_fn(a, b, c, f)) if y is not None]


def test_feedback_diagram_colimit_matches_composite():
    rng = random.Random(2)
    for _ in range(200):
        a, b, c, f = rand_feedback(rng, 3)
        assert cs.iso_eq(mon_colim_functor(feedback_diagram(a, b, c, f)), feedback_cospan(a, b, c, f))


def test_feedback_composites_compose():
    # two feedback boxes in series: the colimit of the glued diagram is the
    # composite of the two feedback cospans
    rng = random.Random(3)
    checked = 0
    while checked < 100:
        a, b, c, f = rand_feedback(rng, 2)
        d, e = rng.randint(0, 2), rng.randint(0, 2)
        if b + e and not d + e:
            continue
        checked += 1
        g = FinFn([rng.randrange(d + e) for _ in range(b + e)], d + e, b + e)
        glued = MonoidalDiagram(
            (FinSetObj(a), FinSetObj(b), FinSetObj(c), FinSetObj(d), FinSetObj(e)),
            (Arc((0, 2), (1, 2), f), Arc((1, 4), (3, 4), g)),
        )
        lhs = mon_colim_functor(MonoidalDiagramCospan(glued, (0,), (3,)))
        rhs = cs.compose(feedback_cospan(a, b, c, f), feedback_cospan(b, d, e, g))
        assert cs.iso_eq(lhs, rhs)


def test_monoidal_universality():
    rng = random.Random(4)
    checked = 0
    while checked < 60:
        a, b, c, f = rand_feedback(rng, 2)
        m = feedback_diagram(a, b, c, f).center
        if a + b + c > 6:
            continue
        checked += 1
        assert mon_universal_cocone_oracle(m, mon_colimit(m), 3)


def test_monoidal_oracle_rejects_non_colimit():
    m = feedback_diagram(1, 1, 1, FinFn([1, 0], 2)).center
    bad = MonCocone(m, FinSetObj(2), (FinFn([0], 2), FinFn([0], 2), FinFn([0], 2)))
    assert bad.commutes() and not mon_universal_cocone_oracle(m, bad, 2)


def test_empty_words():
    m = MonoidalDiagram((FinSetObj(1),), (Arc((), (0,), FinFn([], 1, 0)),))
    assert mon_colimit(m).apex.size == 1
