"""Seeded random instances for the property suites.  Every generator takes a
``random.Random`` so a failing case is reproducible from its seed."""
from __future__ import annotations

import random
from typing import Sequence

from .dcospan import DiagramCospan, DiagramMorphism, DiagramOfDiagrams
from .diagram import Edge, LabeledDiagram
from .finset import FinFn, FinSetObj
from .kleene import LabelledGraph
from .regex import EMPTY, EPS, Concat, Letter, Regex, Star, Union

__all__ = [
    "rand_fn",
    "rand_cospan",
    "rand_diagram",
    "rand_dcospan",
    "rand_composable_pair",
    "rand_diagram_of_diagrams",
    "rand_nfa",
    "rand_regex",
    "rand_feedback",
]


def rand_fn(rng: random.Random, dom: int, cod: int) -> FinFn:
    if dom and not cod:
        raise ValueError("no function from a non-empty set to the empty set")
    return FinFn([rng.randrange(cod) for _ in range(dom)], cod, dom)


def rand_cospan(rng: random.Random, left: int, right: int, max_apex: int = 5):
    from .cospan import Cospan, canonical

    lo = 1 if left or right else 0
    apex = rng.randint(lo, max(lo, max_apex))
    return canonical(
        Cospan(FinSetObj(left), FinSetObj(right), FinSetObj(apex), rand_fn(rng, left, apex), rand_fn(rng, right, apex))
    )


def _edges(rng: random.Random, objs: Sequence[FinSetObj], n_edges: int, start: int = 0) -> list[Edge]:
    out = []
    n = len(objs)
    for k in range(n_edges):
        for _ in range(10):
            s, t = rng.randrange(n), rng.randrange(n)
            if objs[s].size == 0 or objs[t].size > 0:
                break
        else:
            continue
        out.append(Edge(s, t, rand_fn(rng, objs[s].size, objs[t].size), f"e{start + k}"))
    return out


def rand_diagram(
    rng: random.Random,
    max_vertices: int = 4,
    max_size: int = 4,
    max_edges: int = 4,
    sizes: Sequence[int] | None = None,
) -> LabeledDiagram:
    if sizes is None:
        sizes = [rng.randint(0, max_size) for _ in range(rng.randint(0, max_vertices))]
    objs = tuple(FinSetObj(s, f"v{i}") for i, s in enumerate(sizes))
    if not objs:
        return LabeledDiagram(())
    return LabeledDiagram(objs, tuple(_edges(rng, objs, rng.randint(0, max_edges))))


def _foot(rng: random.Random, objs: Sequence[FinSetObj], max_len: int) -> tuple[int, ...]:
    if not objs:
        return ()
    return tuple(rng.randrange(len(objs)) for _ in range(rng.randint(0, max_len)))


def rand_dcospan(
    rng: random.Random,
    max_vertices: int = 4,
    max_size: int = 4,
    max_edges: int = 4,
    feet: str = "any",
) -> DiagramCospan:
    """``feet`` is ``any``, ``closed`` (no feet) or ``boundary`` (every
    vertex on a foot)."""
    d = rand_diagram(rng, max_vertices, max_size, max_edges)
    n = len(d.objects)
    if feet == "closed":
        return DiagramCospan(d)
    if feet == "boundary":
        verts = list(range(n))
        rng.shuffle(verts)
        cut = rng.randint(0, n)
        return DiagramCospan(d, verts[:cut], verts[cut:])
    return DiagramCospan(d, _foot(rng, d.objects, 3), _foot(rng, d.objects, 3))


def rand_composable_pair(
    rng: random.Random, max_vertices: int = 4, max_size: int = 4, max_edges: int = 4
) -> tuple[DiagramCospan, DiagramCospan]:
    a = rand_dcospan(rng, max_vertices, max_size, max_edges)
    need = [o.size for o in a.right_objects]
    # b's first vertices realise the shared foot (equal sizes may share a vertex)
    sizes: list[int] = []
    left: list[int] = []
    for s in need:
        same = [i for i, t in enumerate(sizes) if t == s]
        if same and rng.random() < 0.3:
            left.append(rng.choice(same))
        elif len(sizes) < max_vertices or not same:
            left.append(len(sizes))
            sizes.append(s)
        else:
            left.append(rng.choice(same))
    sizes += [rng.randint(0, max_size) for _ in range(rng.randint(0, max(0, max_vertices - len(sizes))))]
    d = rand_diagram(rng, max_size=max_size, max_edges=max_edges, sizes=sizes)
    b = DiagramCospan(d, left, _foot(rng, d.objects, 3))
    return a, b


def _rand_morphism_source(rng: random.Random, t: LabeledDiagram) -> tuple[LabeledDiagram, DiagramMorphism]:
    """A random diagram together with a morphism into ``t``: its vertices are
    copies of vertices of ``t`` and its edges copies of edges of ``t``."""
    n = rng.randint(1, max(1, len(t.objects)))
    vmap = [rng.randrange(len(t.objects)) for _ in range(n)]
    objs = tuple(FinSetObj(t.objects[w].size, f"s{i}") for i, w in enumerate(vmap))
    edges, emap = [], []
    for f, te in enumerate(t.edges):
        for v in range(n):
            for w in range(n):
                if vmap[v] == te.src and vmap[w] == te.tgt and rng.random() < 0.5:
                    edges.append(Edge(v, w, FinFn(te.fn.table, objs[w], objs[v]), f"c{len(edges)}"))
                    emap.append(f)
    return LabeledDiagram(objs, tuple(edges)), DiagramMorphism(-1, -1, tuple(vmap), tuple(emap))


def rand_diagram_of_diagrams(rng: random.Random, max_total: int = 8) -> DiagramOfDiagrams:
    diagrams: list[LabeledDiagram] = []
    morphisms: list[DiagramMorphism] = []
    budget = max_total
    for _ in range(rng.randint(1, 3)):
        if diagrams and rng.random() < 0.6:
            ti = rng.randrange(len(diagrams))
            if diagrams[ti].objects:
                src, m = _rand_morphism_source(rng, diagrams[ti])
                if src.total_size() <= budget:
                    budget -= src.total_size()
                    morphisms.append(DiagramMorphism(len(diagrams), ti, m.vertex_map, m.edge_map))
                    diagrams.append(src)
                    continue
        sizes = []
        while len(sizes) < 3 and budget > 0 and rng.random() < 0.8:
            s = rng.randint(1, min(3, budget))
            sizes.append(s)
            budget -= s
        diagrams.append(rand_diagram(rng, max_edges=3, sizes=sizes))
    # occasionally add a second morphism between existing diagrams
    if len(diagrams) >= 2 and rng.random() < 0.5:
        i, j = rng.sample(range(len(diagrams)), 2)
        m = _find_morphism(rng, diagrams[i], diagrams[j])
        if m is not None:
            morphisms.append(DiagramMorphism(i, j, m[0], m[1]))
    return DiagramOfDiagrams(tuple(diagrams), tuple(morphisms))


def _find_morphism(rng: random.Random, s: LabeledDiagram, t: LabeledDiagram):
    """A few random attempts at a label-preserving morphism ``s -> t``."""
    for _ in range(20):
        vmap = []
        for o in s.objects:
            options = [w for w, p in enumerate(t.objects) if p.size == o.size]
            if not options:
                return None
            vmap.append(rng.choice(options))
        emap = []
        for e in s.edges:
            options = [
                f
                for f, te in enumerate(t.edges)
                if te.src == vmap[e.src] and te.tgt == vmap[e.tgt] and te.fn.table == e.fn.table
            ]
            if not options:
                break
            emap.append(rng.choice(options))
        else:
            return tuple(vmap), tuple(emap)
    return None


def rand_nfa(
    rng: random.Random,
    max_states: int = 5,
    alphabet: Sequence[str] = ("a", "b"),
    max_edges: int = 8,
    eps_prob: float = 0.2,
) -> LabelledGraph:
    n = rng.randint(1, max_states)
    edges = []
    for _ in range(rng.randint(0, max_edges)):
        lab = None if rng.random() < eps_prob else rng.choice(list(alphabet))
        edges.append((rng.randrange(n), lab, rng.randrange(n)))
    initial = rng.sample(range(n), rng.randint(1, n))
    final = rng.sample(range(n), rng.randint(1, n))
    return LabelledGraph(tuple(alphabet), tuple(f"q{i}" for i in range(n)), tuple(edges), tuple(initial), tuple(final))


def rand_regex(rng: random.Random, depth: int = 5, alphabet: Sequence[str] = ("a", "b")) -> Regex:
    """A raw (unsimplified) regex tree of depth at most ``depth``."""
    if depth <= 0 or rng.random() < 0.25:
        return rng.choice([EMPTY, EPS] + [Letter(a) for a in alphabet] * 2)
    k = rng.random()
    if k < 0.35:
        return Union(rand_regex(rng, depth - 1, alphabet), rand_regex(rng, depth - 1, alphabet))
    if k < 0.7:
        return Concat(rand_regex(rng, depth - 1, alphabet), rand_regex(rng, depth - 1, alphabet))
    return Star(rand_regex(rng, depth - 1, alphabet))


def rand_feedback(rng: random.Random, max_size: int = 3) -> tuple[int, int, int, FinFn]:
    """Sizes ``A, B, C`` and a map ``f : A+C -> B+C``."""
    while True:
        a, b, c = (rng.randint(0, max_size) for _ in range(3))
        if a + c == 0 or b + c > 0:
            return a, b, c, rand_fn(rng, a + c, b + c)
