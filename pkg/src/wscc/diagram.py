"""Finite diagrams of finite sets, their classical (co)limits, and brute-force
universal-property oracles.

Vertices are indexed by position; their display names live in the object
labels.  The oracles enumerate every (co)cone up to a bound and count
factorizations, so they never call the quotient machinery they are used to
check.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

import numpy as np

from .finset import (
    BoundaryError,
    FinFn,
    FinSetObj,
    ObjLike,
    as_obj,
    coequalizer,
    compose_fn,
)

__all__ = [
    "Edge",
    "LabeledDiagram",
    "Cocone",
    "Cone",
    "colimit_classical",
    "limit_classical",
    "universal_cocone_oracle",
    "universal_cone_oracle",
]


@dataclass(frozen=True)
class Edge:
    src: int
    tgt: int
    fn: FinFn
    name: str = ""


@dataclass(frozen=True)
class LabeledDiagram:
    objects: tuple[FinSetObj, ...]
    edges: tuple[Edge, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "objects", tuple(as_obj(o) for o in self.objects))
        object.__setattr__(self, "edges", tuple(self.edges))
        n = len(self.objects)
        for e in self.edges:
            if not (0 <= e.src < n and 0 <= e.tgt < n):
                raise BoundaryError(f"edge {e.name or e} refers to a missing vertex")
            if e.fn.dom.size != self.objects[e.src].size or e.fn.cod.size != self.objects[e.tgt].size:
                raise BoundaryError(
                    f"edge {e.name!r}: {e.fn} does not fit "
                    f"{self.objects[e.src]} -> {self.objects[e.tgt]}"
                )

    @classmethod
    def build(
        cls,
        objects: Mapping[str, ObjLike],
        edges: Iterable[tuple[str, str, str, Sequence[int]]] = (),
    ) -> "LabeledDiagram":
        """Construct from named vertices and ``(name, src, tgt, table)`` edges."""
        names = list(objects)
        index = {n: i for i, n in enumerate(names)}
        objs = tuple(FinSetObj(as_obj(objects[n]).size, n) for n in names)
        es = []
        for name, s, t, table in edges:
            es.append(Edge(index[s], index[t], FinFn(table, objs[index[t]], objs[index[s]]), name))
        return cls(objs, tuple(es))

    @property
    def names(self) -> list[str]:
        return [o.label if o.label is not None else f"v{i}" for i, o in enumerate(self.objects)]

    def offsets(self) -> list[int]:
        out, acc = [], 0
        for o in self.objects:
            out.append(acc)
            acc += o.size
        return out

    def total_size(self) -> int:
        return sum(o.size for o in self.objects)

    def identifications(self) -> list[tuple[int, int]]:
        """Pairs ``(x, f(x))`` in the flattened sum of all vertex objects."""
        off = self.offsets()
        return [
            (off[e.src] + x, off[e.tgt] + y)
            for e in self.edges
            for x, y in enumerate(e.fn.table)
        ]


@dataclass(frozen=True)
class Cocone:
    diagram: LabeledDiagram
    apex: FinSetObj
    legs: tuple[FinFn, ...]

    def combined(self) -> list[int]:
        return [t for leg in self.legs for t in leg.table]

    def commutes(self) -> bool:
        for e in self.diagram.edges:
            if compose_fn(e.fn, self.legs[e.tgt]).table != self.legs[e.src].table:
                return False
        return True


@dataclass(frozen=True)
class Cone:
    diagram: LabeledDiagram
    apex: FinSetObj
    legs: tuple[FinFn, ...]

    def commutes(self) -> bool:
        for e in self.diagram.edges:
            if compose_fn(self.legs[e.src], e.fn).table != self.legs[e.tgt].table:
                return False
        return True


def colimit_classical(d: LabeledDiagram) -> Cocone:
    """Coequalizer of ``u, v: sum of edge domains => sum of objects``, where
    ``u`` includes each edge's domain and ``v`` is the edge followed by the
    inclusion of its codomain."""
    total = d.total_size()
    off = d.offsets()
    u, v = [], []
    for e in d.edges:
        u.extend(off[e.src] + x for x in range(e.fn.dom.size))
        v.extend(off[e.tgt] + y for y in e.fn.table)
    q = coequalizer(FinFn(u, total), FinFn(v, total))
    legs = tuple(
        FinFn(q.table[off[i] : off[i] + o.size], q.cod, o) for i, o in enumerate(d.objects)
    )
    return Cocone(d, q.cod, legs)


def limit_classical(d: LabeledDiagram) -> Cone:
    """Compatible families ``(x_v)`` in the product of all vertex objects,
    enumerated in row-major order."""
    keep = []
    for family in itertools.product(*(range(o.size) for o in d.objects)):
        if all(e.fn.table[family[e.src]] == family[e.tgt] for e in d.edges):
            keep.append(family)
    apex = FinSetObj(len(keep))
    legs = tuple(FinFn([fam[i] for fam in keep], o, apex) for i, o in enumerate(d.objects))
    return Cone(d, apex, legs)


def _all_functions(n_dom: int, n_cod: int) -> np.ndarray:
    """Every function ``[n_dom] -> [n_cod]`` as a row of a matrix."""
    if n_dom == 0:
        return np.zeros((1, 0), dtype=np.int64)
    if n_cod == 0:
        return np.zeros((0, n_dom), dtype=np.int64)
    grids = np.indices((n_cod,) * n_dom).reshape(n_dom, -1).T
    return grids.astype(np.int64)


def cocone_factorization_counts(
    total: int,
    pairs: Sequence[tuple[int, int]],
    combined: Sequence[int],
    apex_size: int,
    n: int,
) -> np.ndarray:
    """For every cocone into ``[n]`` (a function on the flattened vertex sum
    that respects every pair), the number of maps ``apex -> [n]`` it factors
    through ``combined`` by."""
    h = _all_functions(total, n)
    ok = np.ones(len(h), dtype=bool)
    for x, y in pairs:
        ok &= h[:, x] == h[:, y]
    h = h[ok]
    fibers: list[list[int]] = [[] for _ in range(apex_size)]
    for x, p in enumerate(combined):
        fibers[p].append(x)
    defined = np.ones(len(h), dtype=bool)
    empty = 0
    for fib in fibers:
        if not fib:
            empty += 1
            continue
        for x in fib[1:]:
            defined &= h[:, x] == h[:, fib[0]]
    return np.where(defined, n**empty, 0)


def universal_cocone_oracle(d: LabeledDiagram, c: Cocone, bound: int) -> bool:
    """True iff ``c`` is a cocone on ``d`` through which every cocone with apex
    size at most ``bound`` factors exactly once."""
    if len(c.legs) != len(d.objects):
        return False
    for leg, o in zip(c.legs, d.objects):
        if leg.dom.size != o.size or leg.cod.size != c.apex.size:
            return False
    if not c.commutes():
        return False
    pairs = d.identifications()
    combined = c.combined()
    for n in range(bound + 1):
        counts = cocone_factorization_counts(d.total_size(), pairs, combined, c.apex.size, n)
        if np.any(counts != 1):
            return False
    return True


def universal_cone_oracle(d: LabeledDiagram, c: Cone, bound: int) -> bool:
    """Dual check: every cone with apex size at most ``bound`` factors through
    ``c`` exactly once.  Cones are enumerated leg by leg."""
    if len(c.legs) != len(d.objects) or not c.commutes():
        return False
    apex_points = [tuple(leg.table[p] for leg in c.legs) for p in range(c.apex.size)]
    for n in range(bound + 1):
        leg_choices = [itertools.product(range(o.size), repeat=n) for o in d.objects]
        for legs in itertools.product(*leg_choices):
            if not all(
                all(e.fn.table[legs[e.src][i]] == legs[e.tgt][i] for i in range(n))
                for e in d.edges
            ):
                continue
            # each point of the test apex needs exactly one preimage point in c
            for i in range(n):
                point = tuple(leg[i] for leg in legs)
                if apex_points.count(point) != 1:
                    return False
    return True
