"""Cospans of diagrams with discrete feet, and the colimit functor to
cospans of finite sets.

Composition glues centres along the shared feet exactly as in the category
of graphs; no colimit of finite sets is taken until ``colim_functor``.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Sequence

from . import cospan as cs
from .cospan import Cospan, Kind, Span
from .diagram import Edge, LabeledDiagram, colimit_classical, limit_classical
from .finset import (
    BoundaryError,
    FinFn,
    FinSetObj,
    ObjLike,
    UnionFind,
    as_obj,
    cotuple,
    initial_map,
    terminal_map,
    tuple_fn,
)

__all__ = [
    "DiagramCospan",
    "dcompose",
    "dtensor",
    "dconstant",
    "ddisc",
    "dgen",
    "colim_functor",
    "lim_functor",
    "disc_colim",
    "DiagramMorphism",
    "DiagramOfDiagrams",
    "NestedColimResult",
    "nested_colim_check",
]


@dataclass(frozen=True)
class DiagramCospan:
    """``left -> center <- right`` where the feet are lists of vertex indices
    into the centre (repeats allowed)."""

    center: LabeledDiagram
    left: tuple[int, ...] = ()
    right: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "left", tuple(self.left))
        object.__setattr__(self, "right", tuple(self.right))
        n = len(self.center.objects)
        for v in self.left + self.right:
            if not 0 <= v < n:
                raise BoundaryError(f"foot refers to missing vertex {v}")

    @property
    def left_objects(self) -> list[FinSetObj]:
        return [self.center.objects[v] for v in self.left]

    @property
    def right_objects(self) -> list[FinSetObj]:
        return [self.center.objects[v] for v in self.right]

    def is_closed(self) -> bool:
        return not self.left and not self.right


def _sizes(objs: Sequence[FinSetObj]) -> list[int]:
    return [o.size for o in objs]


def _glue(
    objects: Sequence[FinSetObj],
    edges: Sequence[Edge],
    pairs: Sequence[tuple[int, int]],
) -> tuple[LabeledDiagram, list[int]]:
    """Identify vertices along ``pairs``; returns the glued diagram and the
    vertex relabelling (classes numbered by least member)."""
    uf = UnionFind(len(objects))
    for x, y in pairs:
        if objects[x].size != objects[y].size:
            raise BoundaryError(
                f"cannot identify vertices {objects[x].label or x} and "
                f"{objects[y].label or y}: {objects[x]} != {objects[y]}"
            )
        uf.union(x, y)
    cls = uf.classes()
    k = max(cls) + 1 if cls else 0
    new_objs: list[FinSetObj | None] = [None] * k
    for v, c in enumerate(cls):
        if new_objs[c] is None:
            new_objs[c] = objects[v]
    new_edges = tuple(Edge(cls[e.src], cls[e.tgt], e.fn, e.name) for e in edges)
    return LabeledDiagram(tuple(new_objs), new_edges), cls


def dcompose(a: DiagramCospan, b: DiagramCospan) -> DiagramCospan:
    """Glue ``a`` and ``b`` along ``a.right`` = ``b.left``."""
    if _sizes(a.right_objects) != _sizes(b.left_objects):
        raise BoundaryError(
            f"foot mismatch: {_sizes(a.right_objects)} vs {_sizes(b.left_objects)}"
        )
    na = len(a.center.objects)
    objects = list(a.center.objects) + list(b.center.objects)
    edges = list(a.center.edges) + [
        Edge(e.src + na, e.tgt + na, e.fn, e.name) for e in b.center.edges
    ]
    pairs = [(x, na + y) for x, y in zip(a.right, b.left)]
    center, cls = _glue(objects, edges, pairs)
    return DiagramCospan(center, [cls[v] for v in a.left], [cls[na + v] for v in b.right])


def dtensor(a: DiagramCospan, b: DiagramCospan) -> DiagramCospan:
    na = len(a.center.objects)
    center = LabeledDiagram(
        a.center.objects + b.center.objects,
        a.center.edges + tuple(Edge(e.src + na, e.tgt + na, e.fn, e.name) for e in b.center.edges),
    )
    return DiagramCospan(center, a.left + tuple(v + na for v in b.left), a.right + tuple(v + na for v in b.right))


def ddisc(src: Sequence[ObjLike], tgt: Sequence[ObjLike], phi: Sequence[int], reverse: bool = False) -> DiagramCospan:
    """The discrete cospan ``{src_i} -phi-> {tgt_j} <-id- {tgt_j}``; reversed
    swaps the feet."""
    src = [as_obj(o) for o in src]
    tgt = [as_obj(o) for o in tgt]
    if len(phi) != len(src):
        raise BoundaryError(f"index map of length {len(phi)} for {len(src)} source objects")
    for i, j in enumerate(phi):
        if not 0 <= j < len(tgt) or src[i].size != tgt[j].size:
            raise BoundaryError(f"index map sends {src[i]} (slot {i}) to an object of another size")
    center = LabeledDiagram(tuple(tgt))
    left, right = tuple(phi), tuple(range(len(tgt)))
    return DiagramCospan(center, right, left) if reverse else DiagramCospan(center, left, right)


def dconstant(kind: Kind | str, objects: Sequence[ObjLike]) -> DiagramCospan:
    """Structural constants as discrete cospans on the object list.

    For ``Kind.SYM`` the list is split as ``[A, B]``: exactly two objects, or
    a pair of lists passed as ``[[...], [...]]``.
    """
    kind = Kind(kind) if isinstance(kind, str) else kind
    if kind is Kind.SYM:
        first, second = objects
        first = [as_obj(o) for o in (first if isinstance(first, (list, tuple)) else [first])]
        second = [as_obj(o) for o in (second if isinstance(second, (list, tuple)) else [second])]
        p, q = len(first), len(second)
        return ddisc(first + second, second + first, [q + i for i in range(p)] + list(range(q)))
    objs = [as_obj(o) for o in objects]
    n = len(objs)
    ids = list(range(n))
    center = LabeledDiagram(tuple(objs))
    feet = {
        Kind.ID: (ids, ids),
        Kind.MULT: (ids + ids, ids),
        Kind.COMULT: (ids, ids + ids),
        Kind.UNIT: ([], ids),
        Kind.COUNIT: (ids, []),
        Kind.ETA: ([], ids + ids),
        Kind.EPS: (ids + ids, []),
    }[kind]
    return DiagramCospan(center, feet[0], feet[1])


def dgen(fn: FinFn, name: str = "", dom_label: str | None = None, cod_label: str | None = None) -> DiagramCospan:
    """``{A} -> {A -f-> B} <- {B}``."""
    center = LabeledDiagram(
        (FinSetObj(fn.dom.size, dom_label), FinSetObj(fn.cod.size, cod_label)),
        (Edge(0, 1, fn, name),),
    )
    return DiagramCospan(center, (0,), (1,))


# -- functors to (co)spans of finite sets -----------------------------------


def colim_functor(c: DiagramCospan) -> Cospan:
    """Take the colimit of the centre; the feet map in through the cocone legs."""
    cone = colimit_classical(c.center)
    legs_l = [cone.legs[v] for v in c.left]
    legs_r = [cone.legs[v] for v in c.right]
    legL = cotuple(*legs_l) if legs_l else initial_map(cone.apex)
    legR = cotuple(*legs_r) if legs_r else initial_map(cone.apex)
    return cs.canonical(Cospan(legL.dom, legR.dom, cone.apex, legL, legR))


def _tuple_all(legs: Sequence[FinFn], apex: FinSetObj) -> FinFn:
    out = terminal_map(apex)
    for leg in legs:
        out = tuple_fn(out, leg)
    return out


def lim_functor(c: DiagramCospan) -> Span:
    """Take the limit of the centre; legs go out to the row-major product of
    each foot."""
    cone = limit_classical(c.center)
    legL = _tuple_all([cone.legs[v] for v in c.left], cone.apex)
    legR = _tuple_all([cone.legs[v] for v in c.right], cone.apex)
    return cs.canonical(Span(legL.cod, legR.cod, cone.apex, legL, legR))


def disc_colim(
    src: Sequence[ObjLike],
    tgt: Sequence[ObjLike],
    phi: Sequence[int],
    reverse: bool = False,
    mode: cs.Mode = "cospan",
) -> cs.Arrow:
    """Image of a discrete index map under colim (or lim in span mode): the
    block map sending summand ``i`` identically onto summand ``phi(i)``."""
    src = [as_obj(o) for o in src]
    tgt = [as_obj(o) for o in tgt]
    if mode == "cospan":
        off = [0]
        for o in tgt:
            off.append(off[-1] + o.size)
        table = [off[phi[i]] + x for i, o in enumerate(src) for x in range(o.size)]
        f = FinFn(table, off[-1])
    else:
        # a point of the target product is a tuple; read off coordinates phi(i)
        tuples = list(itertools.product(*(range(o.size) for o in tgt)))
        sizes = [o.size for o in src]
        table = []
        for t in tuples:
            k = 0
            for i, s in enumerate(sizes):
                k = k * s + t[phi[i]]
            table.append(k)
        n = 1
        for s in sizes:
            n *= s
        f = FinFn(table, n, len(tuples))
    if mode == "cospan":
        a = cs.lift(f, "forward", mode)
    else:
        a = cs.lift(f, "backward", mode)
    return cs.reverse(a) if reverse else a


# -- nested colimits --------------------------------------------------------


@dataclass(frozen=True)
class DiagramMorphism:
    """A label-preserving graph morphism between two diagrams."""

    src: int
    tgt: int
    vertex_map: tuple[int, ...]
    edge_map: tuple[int, ...]


@dataclass(frozen=True)
class DiagramOfDiagrams:
    diagrams: tuple[LabeledDiagram, ...]
    morphisms: tuple[DiagramMorphism, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "diagrams", tuple(self.diagrams))
        object.__setattr__(self, "morphisms", tuple(self.morphisms))
        for m in self.morphisms:
            s, t = self.diagrams[m.src], self.diagrams[m.tgt]
            if len(m.vertex_map) != len(s.objects) or len(m.edge_map) != len(s.edges):
                raise BoundaryError("diagram morphism does not cover its source")
            for v, w in enumerate(m.vertex_map):
                if s.objects[v].size != t.objects[w].size:
                    raise BoundaryError(f"vertex {v} sent to a vertex with another object")
            for e, f in enumerate(m.edge_map):
                se, te = s.edges[e], t.edges[f]
                if (
                    m.vertex_map[se.src] != te.src
                    or m.vertex_map[se.tgt] != te.tgt
                    or se.fn.table != te.fn.table
                ):
                    raise BoundaryError(f"edge {e} sent to an edge with other endpoints or label")


@dataclass(frozen=True)
class NestedColimResult:
    ok: bool
    flattened: FinSetObj
    iterated: FinSetObj
    witness: FinFn | None = field(default=None)


def nested_colim_check(dd: DiagramOfDiagrams) -> NestedColimResult:
    """Compare the colimit of the glued diagram with the colimit of the
    diagram of colimits; the witness is the comparison map between them."""
    # route 1: glue in Graph/|E|, then one colimit in E
    voff, eoff = [], []
    objects: list[FinSetObj] = []
    edges: list[Edge] = []
    for d in dd.diagrams:
        voff.append(len(objects))
        eoff.append(len(edges))
        objects.extend(d.objects)
        edges.extend(Edge(e.src + voff[-1], e.tgt + voff[-1], e.fn, e.name) for e in d.edges)
    vpairs = [
        (voff[m.src] + v, voff[m.tgt] + w) for m in dd.morphisms for v, w in enumerate(m.vertex_map)
    ]
    epairs = [(eoff[m.src] + e, eoff[m.tgt] + f) for m in dd.morphisms for e, f in enumerate(m.edge_map)]
    euf = UnionFind(len(edges))
    for x, y in epairs:
        euf.union(x, y)
    kept_edges = [e for i, e in enumerate(edges) if euf.find(i) == i]
    glued, vcls = _glue(objects, kept_edges, vpairs)
    flat = colimit_classical(glued)

    # route 2: colimit of each diagram, then of the induced diagram of sets
    inner = [colimit_classical(d) for d in dd.diagrams]
    outer_edges = []
    for m in dd.morphisms:
        src_c, tgt_c = inner[m.src], inner[m.tgt]
        table = [0] * src_c.apex.size
        for v, leg in enumerate(src_c.legs):
            tleg = tgt_c.legs[m.vertex_map[v]]
            for x, p in enumerate(leg.table):
                table[p] = tleg.table[x]
        outer_edges.append(Edge(m.src, m.tgt, FinFn(table, tgt_c.apex, src_c.apex)))
    outer = colimit_classical(LabeledDiagram(tuple(c.apex for c in inner), tuple(outer_edges)))

    # comparison: element x of vertex v in diagram g goes to both sides
    witness: dict[int, int] = {}
    consistent = True
    for g, d in enumerate(dd.diagrams):
        for v in range(len(d.objects)):
            flat_leg = flat.legs[vcls[voff[g] + v]]
            for x in range(d.objects[v].size):
                a = flat_leg.table[x]
                b = outer.legs[g].table[inner[g].legs[v].table[x]]
                if witness.setdefault(a, b) != b:
                    consistent = False
    wfn = None
    ok = consistent and flat.apex.size == outer.apex.size and len(witness) == flat.apex.size
    if ok:
        wfn = FinFn([witness[a] for a in range(flat.apex.size)], outer.apex, flat.apex)
        ok = wfn.is_injective() and wfn.is_surjective()
    return NestedColimResult(ok, flat.apex, outer.apex, wfn)
