"""Monoidal diagrams in (finite sets, +): arcs with several inputs and
outputs, their colimits, and the feedback example."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from . import cospan as cs
from .cospan import Cospan, Kind
from .diagram import cocone_factorization_counts
from .finset import (
    BoundaryError,
    FinFn,
    FinSetObj,
    ObjLike,
    as_obj,
    coequalizer,
    cotuple,
    initial_map,
)

__all__ = [
    "Arc",
    "MonoidalDiagram",
    "MonoidalDiagramCospan",
    "MonCocone",
    "mon_colimit",
    "mon_colim_functor",
    "mon_universal_cocone_oracle",
    "feedback_cospan",
    "feedback_diagram",
    "trace_partial_fn",
]


@dataclass(frozen=True)
class Arc:
    d0: tuple[int, ...]
    d1: tuple[int, ...]
    fn: FinFn
    name: str = ""


@dataclass(frozen=True)
class MonoidalDiagram:
    """Vertices labelled by finite sets; each arc is labelled by a function
    from the sum of its input labels to the sum of its output labels.  Empty
    words stand for the empty set."""

    objects: tuple[FinSetObj, ...]
    arcs: tuple[Arc, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "objects", tuple(as_obj(o) for o in self.objects))
        object.__setattr__(self, "arcs", tuple(self.arcs))
        n = len(self.objects)
        for a in self.arcs:
            if any(not 0 <= v < n for v in a.d0 + a.d1):
                raise BoundaryError(f"arc {a.name!r} refers to a missing vertex")
            ins = sum(self.objects[v].size for v in a.d0)
            outs = sum(self.objects[v].size for v in a.d1)
            if a.fn.dom.size != ins or a.fn.cod.size != outs:
                raise BoundaryError(f"arc {a.name!r}: {a.fn} does not fit [{ins}] -> [{outs}]")

    def offsets(self) -> list[int]:
        out, acc = [], 0
        for o in self.objects:
            out.append(acc)
            acc += o.size
        return out

    def total_size(self) -> int:
        return sum(o.size for o in self.objects)

    def identifications(self) -> list[tuple[int, int]]:
        """Pairs ``(x, f(x))`` in the flattened vertex sum, one per input
        element of every arc."""
        off = self.offsets()
        pairs = []
        for a in self.arcs:
            ins = [off[v] + x for v in a.d0 for x in range(self.objects[v].size)]
            outs = [off[v] + y for v in a.d1 for y in range(self.objects[v].size)]
            pairs.extend((ins[i], outs[t]) for i, t in enumerate(a.fn.table))
        return pairs


@dataclass(frozen=True)
class MonoidalDiagramCospan:
    center: MonoidalDiagram
    left: tuple[int, ...] = ()
    right: tuple[int, ...] = ()


@dataclass(frozen=True)
class MonCocone:
    diagram: MonoidalDiagram
    apex: FinSetObj
    legs: tuple[FinFn, ...]

    def commutes(self) -> bool:
        for a in self.diagram.arcs:
            ins = [t for v in a.d0 for t in self.legs[v].table]
            outs = [t for v in a.d1 for t in self.legs[v].table]
            if [outs[t] for t in a.fn.table] != ins:
                return False
        return True


def mon_colimit(d: MonoidalDiagram) -> MonCocone:
    """Coequalizer of the two maps from the sum of arc inputs to the sum of
    vertex objects: include each input, or apply the arc and include."""
    pairs = d.identifications()
    total = d.total_size()
    q = coequalizer(FinFn([x for x, _ in pairs], total), FinFn([y for _, y in pairs], total))
    off = d.offsets()
    legs = tuple(FinFn(q.table[off[i] : off[i] + o.size], q.cod, o) for i, o in enumerate(d.objects))
    return MonCocone(d, q.cod, legs)


def mon_colim_functor(c: MonoidalDiagramCospan) -> Cospan:
    cone = mon_colimit(c.center)
    legs_l = [cone.legs[v] for v in c.left]
    legs_r = [cone.legs[v] for v in c.right]
    legL = cotuple(*legs_l) if legs_l else initial_map(cone.apex)
    legR = cotuple(*legs_r) if legs_r else initial_map(cone.apex)
    return cs.canonical(Cospan(legL.dom, legR.dom, cone.apex, legL, legR))


def mon_universal_cocone_oracle(d: MonoidalDiagram, c: MonCocone, bound: int) -> bool:
    """Every monoidal cocone with apex at most ``bound`` factors through ``c``
    exactly once (exhaustive enumeration)."""
    if len(c.legs) != len(d.objects) or not c.commutes():
        return False
    combined = [t for leg in c.legs for t in leg.table]
    for n in range(bound + 1):
        counts = cocone_factorization_counts(d.total_size(), d.identifications(), combined, c.apex.size, n)
        if np.any(counts != 1):
            return False
    return True


def _check_feedback(a: FinSetObj, b: FinSetObj, c: FinSetObj, f: FinFn) -> None:
    if f.dom.size != a.size + c.size or f.cod.size != b.size + c.size:
        raise BoundaryError(f"feedback map {f} does not fit A+C -> B+C with A={a}, B={b}, C={c}")


def feedback_cospan(a: ObjLike, b: ObjLike, c: ObjLike, f: FinFn) -> Cospan:
    """``(1_A * eta_C) ; (f * 1_C) ; (1_B * eps_C)`` in cospans of finite sets."""
    a, b, c = as_obj(a), as_obj(b), as_obj(c)
    _check_feedback(a, b, c, f)
    return cs.compose_all(
        [
            cs.tensor(cs.identity(a), cs.constant(Kind.ETA, c)),
            cs.tensor(cs.lift(f), cs.identity(c)),
            cs.tensor(cs.identity(b), cs.constant(Kind.EPS, c)),
        ]
    )


def feedback_diagram(a: ObjLike, b: ObjLike, c: ObjLike, f: FinFn) -> MonoidalDiagramCospan:
    """Centre ``{A, B, C}`` with one arc ``f: A+C -> B+C``; feet ``{A}`` and ``{B}``."""
    a, b, c = as_obj(a), as_obj(b), as_obj(c)
    _check_feedback(a, b, c, f)
    center = MonoidalDiagram(
        (FinSetObj(a.size, "A"), FinSetObj(b.size, "B"), FinSetObj(c.size, "C")),
        (Arc((0, 2), (1, 2), f, "f"),),
    )
    return MonoidalDiagramCospan(center, (0,), (1,))


def trace_partial_fn(a: ObjLike, b: ObjLike, c: ObjLike, f: FinFn) -> list[int | None]:
    """Iterate ``f`` from each ``a`` until it leaves ``C``; ``None`` where it
    cycles inside ``C`` forever."""
    a, b, c = as_obj(a), as_obj(b), as_obj(c)
    _check_feedback(a, b, c, f)
    out: list[int | None] = []
    for x in range(a.size):
        y = f.table[x]
        seen: set[int] = set()
        while y >= b.size:
            k = y - b.size
            if k in seen:
                y = None
                break
            seen.add(k)
            y = f.table[a.size + k]
        out.append(y)
    return out
