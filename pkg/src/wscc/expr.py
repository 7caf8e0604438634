"""Expressions in the free wscc category on a graph of finite-set arrows.

Leaves are structural constants on object lists, generators (single arrows),
and discrete index maps; nodes are sequential composition in diagrammatic
order (``Seq(a, b)`` is ``a`` then ``b``) and tensor.  Expressions evaluate
to diagram cospans, to cospans (colimits), or to spans (limits).
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Union

from . import cospan as cs
from .cospan import Kind
from .dcospan import (
    DiagramCospan,
    dcompose,
    dconstant,
    ddisc,
    dgen,
    disc_colim,
    dtensor,
)
from .finset import BoundaryError, FinFn, FinSetObj

__all__ = [
    "ExprTypeError",
    "Const",
    "Gen",
    "Disc",
    "Seq",
    "Ten",
    "Expr",
    "boundary",
    "seq",
    "ten",
    "evaluate",
    "eval_diagram",
    "compile_diagram",
    "expand_disc",
    "dual",
    "reassociate",
]


class ExprTypeError(BoundaryError):
    """Boundary object lists disagree at a composition node."""


Objs = tuple[FinSetObj, ...]


@dataclass(frozen=True)
class Const:
    kind: Kind
    objects: Objs = ()
    # second object list, only for Kind.SYM
    other: Objs = ()


@dataclass(frozen=True)
class Gen:
    fn: FinFn
    name: str = ""


@dataclass(frozen=True)
class Disc:
    """Discrete index map ``src -> tgt``; ``reverse`` flips its direction."""

    src: Objs
    tgt: Objs
    phi: tuple[int, ...]
    reverse: bool = False


@dataclass(frozen=True)
class Seq:
    first: "Expr"
    second: "Expr"


@dataclass(frozen=True)
class Ten:
    left: "Expr"
    right: "Expr"


Expr = Union[Const, Gen, Disc, Seq, Ten]


def seq(*es: Expr) -> Expr:
    out = es[0]
    for e in es[1:]:
        out = Seq(out, e)
    return out


def ten(*es: Expr) -> Expr:
    if not es:
        return Const(Kind.ID, ())
    out = es[0]
    for e in es[1:]:
        out = Ten(out, e)
    return out


def _sizes(objs: Sequence[FinSetObj]) -> list[int]:
    return [o.size for o in objs]


def boundary(e: Expr) -> tuple[Objs, Objs]:
    """Input and output object lists; raises ExprTypeError on a bad Seq or
    index map."""
    if isinstance(e, Const):
        xs = e.objects
        k = e.kind
        if k is Kind.ID:
            return xs, xs
        if k is Kind.SYM:
            return xs + e.other, e.other + xs
        return {
            Kind.MULT: (xs + xs, xs),
            Kind.COMULT: (xs, xs + xs),
            Kind.UNIT: ((), xs),
            Kind.COUNIT: (xs, ()),
            Kind.ETA: ((), xs + xs),
            Kind.EPS: (xs + xs, ()),
        }[k]
    if isinstance(e, Gen):
        return (e.fn.dom,), (e.fn.cod,)
    if isinstance(e, Disc):
        if len(e.phi) != len(e.src) or any(
            not 0 <= j < len(e.tgt) or e.src[i].size != e.tgt[j].size for i, j in enumerate(e.phi)
        ):
            raise ExprTypeError(f"ill-typed index map {list(e.phi)}: {_sizes(e.src)} -> {_sizes(e.tgt)}")
        return (e.tgt, e.src) if e.reverse else (e.src, e.tgt)
    if isinstance(e, Seq):
        a_in, a_out = boundary(e.first)
        b_in, b_out = boundary(e.second)
        if _sizes(a_out) != _sizes(b_in):
            raise ExprTypeError(f"cannot compose: output {_sizes(a_out)} vs input {_sizes(b_in)}")
        return a_in, b_out
    if isinstance(e, Ten):
        a_in, a_out = boundary(e.left)
        b_in, b_out = boundary(e.right)
        return a_in + b_in, a_out + b_out
    raise TypeError(f"not an expression: {e!r}")


# -- evaluation -------------------------------------------------------------


def evaluate(e: Expr, mode: cs.Mode = "cospan") -> cs.Arrow:
    """Evaluate in cospans (colimits) or spans (limits) of finite sets."""
    boundary(e)
    return _evaluate(e, mode)


def _evaluate(e: Expr, mode: cs.Mode) -> cs.Arrow:
    if isinstance(e, Const):
        if e.kind is Kind.SYM:
            return cs.symmetry(cs.tensor_obj(mode, *e.objects), cs.tensor_obj(mode, *e.other), mode)
        return cs.constant(e.kind, cs.tensor_obj(mode, *e.objects), mode)
    if isinstance(e, Gen):
        return cs.lift(e.fn, "forward", mode)
    if isinstance(e, Disc):
        return disc_colim(e.src, e.tgt, e.phi, e.reverse, mode)
    if isinstance(e, Seq):
        return cs.compose(_evaluate(e.first, mode), _evaluate(e.second, mode))
    if isinstance(e, Ten):
        return cs.tensor(_evaluate(e.left, mode), _evaluate(e.right, mode))
    raise TypeError(f"not an expression: {e!r}")


def eval_diagram(e: Expr) -> DiagramCospan:
    """Evaluate in cospans of diagrams (no colimit is taken)."""
    boundary(e)
    return _eval_diagram(e)


def _eval_diagram(e: Expr) -> DiagramCospan:
    if isinstance(e, Const):
        if e.kind is Kind.SYM:
            return dconstant(Kind.SYM, [list(e.objects), list(e.other)])
        return dconstant(e.kind, e.objects)
    if isinstance(e, Gen):
        return dgen(e.fn, e.name, e.fn.dom.label, e.fn.cod.label)
    if isinstance(e, Disc):
        return ddisc(e.src, e.tgt, e.phi, e.reverse)
    if isinstance(e, Seq):
        return dcompose(_eval_diagram(e.first), _eval_diagram(e.second))
    if isinstance(e, Ten):
        return dtensor(_eval_diagram(e.left), _eval_diagram(e.right))
    raise TypeError(f"not an expression: {e!r}")


# -- compilation ------------------------------------------------------------


def _gen_of(c: DiagramCospan, i: int) -> Gen:
    e = c.center.edges[i]
    objs = c.center.objects
    fn = FinFn(e.fn.table, objs[e.tgt], objs[e.src])
    return Gen(fn, e.name or f"e{i}")


def compile_diagram(c: DiagramCospan) -> Expr:
    """An expression whose value is (isomorphic to) ``c``.

    A closed diagram becomes ``eta(dom) ; ((arcs ; i_cod) * i_dom) ; eps(obj)``,
    the classical coequalizer presentation.  With feet, the arcs are wrapped
    as an endomorphism ``W`` of the vertex list and fed back through
    ``comult ; (W * id) ; mult`` between the two foot index maps.
    """
    center = c.center
    objs = center.objects
    edges = center.edges
    dom = tuple(objs[e.src] for e in edges)
    cod = tuple(objs[e.tgt] for e in edges)
    arcs = ten(*(_gen_of(c, i) for i in range(len(edges))))
    i_dom = Disc(dom, objs, tuple(e.src for e in edges))
    i_cod = Disc(cod, objs, tuple(e.tgt for e in edges))
    if _is_fan(c):
        return _fan_word(objs[c.left[0]], objs[c.right[0]], arcs, len(edges))
    if c.is_closed():
        return seq(Const(Kind.ETA, dom), Ten(Seq(arcs, i_cod), i_dom), Const(Kind.EPS, objs))
    w = seq(Disc(dom, objs, i_dom.phi, reverse=True), arcs, i_cod)
    return seq(
        Disc(tuple(c.left_objects), objs, c.left),
        Const(Kind.COMULT, objs),
        Ten(w, Const(Kind.ID, objs)),
        Const(Kind.MULT, objs),
        Disc(tuple(c.right_objects), objs, c.right, reverse=True),
    )


def _is_fan(c: DiagramCospan) -> bool:
    """Two vertices, one on each foot, every edge running left to right."""
    edges = c.center.edges
    return (
        len(c.center.objects) == 2
        and len(c.left) == len(c.right) == 1
        and c.left != c.right
        and bool(edges)
        and all(e.src == c.left[0] and e.tgt == c.right[0] for e in edges)
    )


def _fan_word(a: FinSetObj, b: FinSetObj, arcs: Expr, k: int) -> Expr:
    # comult(A) ; (f1 * ... * fk) ; mult(B), with k-fold splits and merges
    if k == 1:
        return arcs
    def pad(e: Expr, o: FinSetObj, r: int) -> Expr:
        return Ten(e, Const(Kind.ID, (o,) * (r - 2))) if r > 2 else e

    split = [pad(Const(Kind.COMULT, (a,)), a, r) for r in range(2, k + 1)]
    merge = [pad(Const(Kind.MULT, (b,)), b, r) for r in range(k, 1, -1)]
    return seq(*split, arcs, *merge)


# -- rewriting helpers ------------------------------------------------------

_DUAL_KIND = {
    Kind.ID: Kind.ID,
    Kind.SYM: Kind.SYM,
    Kind.MULT: Kind.COMULT,
    Kind.COMULT: Kind.MULT,
    Kind.UNIT: Kind.COUNIT,
    Kind.COUNIT: Kind.UNIT,
    Kind.ETA: Kind.EPS,
    Kind.EPS: Kind.ETA,
}


def dual(e: Expr) -> Expr:
    """Mirror image of a generator-free expression."""
    if isinstance(e, Const):
        if e.kind is Kind.SYM:
            return Const(Kind.SYM, e.other, e.objects)
        return Const(_DUAL_KIND[e.kind], e.objects)
    if isinstance(e, Disc):
        return Disc(e.src, e.tgt, e.phi, not e.reverse)
    if isinstance(e, Seq):
        return Seq(dual(e.second), dual(e.first))
    if isinstance(e, Ten):
        return Ten(dual(e.left), dual(e.right))
    raise ValueError("generators have no mirror image")


def _disc_word(src: Objs, tgt: Objs, phi: Sequence[int]) -> Expr:
    # bubble sort the source slots by target index using adjacent swaps,
    # then merge each run of equal targets with mult (or create it with unit)
    cur = list(range(len(src)))
    layers: list[Expr] = []
    changed = True
    while changed:
        changed = False
        for k in range(len(cur) - 1):
            if phi[cur[k]] > phi[cur[k + 1]]:
                before = tuple(src[i] for i in cur[:k])
                after = tuple(src[i] for i in cur[k + 2 :])
                a, b = src[cur[k]], src[cur[k + 1]]
                layers.append(ten(Const(Kind.ID, before), Const(Kind.SYM, (a,), (b,)), Const(Kind.ID, after)))
                cur[k], cur[k + 1] = cur[k + 1], cur[k]
                changed = True
    merges: list[Expr] = []
    for j, o in enumerate(tgt):
        k = sum(1 for i in cur if phi[i] == j)
        if k == 0:
            merges.append(Const(Kind.UNIT, (o,)))
            continue
        if k == 1:
            m: Expr = Const(Kind.ID, (o,))
        else:
            m = seq(*(ten(Const(Kind.MULT, (o,)), Const(Kind.ID, (o,) * (r - 2))) for r in range(k, 1, -1)))
        merges.append(m)
    body = ten(*merges)
    return seq(*layers, body) if layers else body


def expand_disc(e: Expr) -> Expr:
    """Replace every discrete index map by a word in sym, mult and unit (or
    their mirror images for reversed maps)."""
    if isinstance(e, Disc):
        word = _disc_word(e.src, e.tgt, e.phi)
        return dual(word) if e.reverse else word
    if isinstance(e, Seq):
        return Seq(expand_disc(e.first), expand_disc(e.second))
    if isinstance(e, Ten):
        return Ten(expand_disc(e.left), expand_disc(e.right))
    return e


def _flatten(e: Expr, cls) -> list[Expr]:
    if isinstance(e, cls):
        a, b = (e.first, e.second) if cls is Seq else (e.left, e.right)
        return _flatten(a, cls) + _flatten(b, cls)
    return [e]


def reassociate(e: Expr, rng) -> Expr:
    """Same leaves, same order, random bracketing of every Seq and Ten chain."""
    if isinstance(e, (Seq, Ten)):
        cls = type(e)
        parts = [reassociate(p, rng) for p in _flatten(e, cls)]
        return _random_bracket(parts, cls, rng)
    return e


def _random_bracket(parts: list[Expr], cls, rng) -> Expr:
    if len(parts) == 1:
        return parts[0]
    k = rng.randrange(1, len(parts))
    return cls(_random_bracket(parts[:k], cls, rng), _random_bracket(parts[k:], cls, rng))
