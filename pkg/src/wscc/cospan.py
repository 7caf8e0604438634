"""Cospans and spans of finite sets as wscc categories.

In cospan mode the tensor is sum and composition is pushout; in span mode the
tensor is the row-major product and composition is pullback.  Every result
is returned in canonical form so equal isomorphism classes compare equal.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Literal, Union

from .finset import (
    BoundaryError,
    FinFn,
    FinSetObj,
    ObjLike,
    as_obj,
    codiagonal,
    compose_fn,
    diagonal,
    fn_product,
    fn_sum,
    identity as fn_identity,
    initial_map,
    pullback,
    pushout,
    terminal_map,
)

__all__ = [
    "Mode",
    "Kind",
    "Cospan",
    "Span",
    "Arrow",
    "canonical",
    "constant",
    "lift",
    "identity",
    "symmetry",
    "compose",
    "tensor",
    "tensor_obj",
    "unit_obj",
    "iso_eq",
    "format_arrow",
]

Mode = Literal["cospan", "span"]
MODES: tuple[Mode, Mode] = ("cospan", "span")


class Kind(enum.Enum):
    ID = "id"
    SYM = "sym"
    MULT = "mult"
    UNIT = "unit"
    COMULT = "comult"
    COUNIT = "counit"
    ETA = "eta"
    EPS = "eps"


@dataclass(frozen=True)
class Cospan:
    """``left -legL-> apex <-legR- right``."""

    left: FinSetObj
    right: FinSetObj
    apex: FinSetObj
    legL: FinFn
    legR: FinFn

    mode = "cospan"

    def __post_init__(self):
        if self.legL.dom.size != self.left.size or self.legR.dom.size != self.right.size:
            raise BoundaryError(f"cospan legs {self.legL}, {self.legR} do not start at the feet")
        if self.legL.cod.size != self.apex.size or self.legR.cod.size != self.apex.size:
            raise BoundaryError(f"cospan legs {self.legL}, {self.legR} miss the apex {self.apex}")

    def __str__(self) -> str:
        return format_arrow(self)


@dataclass(frozen=True)
class Span:
    """``left <-legL- apex -legR-> right``."""

    left: FinSetObj
    right: FinSetObj
    apex: FinSetObj
    legL: FinFn
    legR: FinFn

    mode = "span"

    def __post_init__(self):
        if self.legL.dom.size != self.apex.size or self.legR.dom.size != self.apex.size:
            raise BoundaryError(f"span legs {self.legL}, {self.legR} do not start at the apex")
        if self.legL.cod.size != self.left.size or self.legR.cod.size != self.right.size:
            raise BoundaryError(f"span legs {self.legL}, {self.legR} miss the feet")

    def __str__(self) -> str:
        return format_arrow(self)


Arrow = Union[Cospan, Span]


def _table(f: FinFn) -> str:
    return "[" + ",".join(map(str, f.table)) + "]"


def format_arrow(a: Arrow) -> str:
    if isinstance(a, Cospan):
        return f"{a.left} -{_table(a.legL)}-> {a.apex} <-{_table(a.legR)}- {a.right}"
    return f"{a.left} <-{_table(a.legL)}- {a.apex} -{_table(a.legR)}-> {a.right}"


def make(mode: Mode, left, right, apex, legL, legR) -> Arrow:
    cls = Cospan if mode == "cospan" else Span
    return cls(as_obj(left), as_obj(right), as_obj(apex), legL, legR)


# -- canonical form ---------------------------------------------------------


def canonical(a: Arrow) -> Arrow:
    """Relabel the apex into its canonical order.

    Cospan apex points are sorted by their preimage in the combined foot
    ``left + right`` (preimages are disjoint, so this is the order of least
    members), untouched points last.  Span apex points are sorted by the pair
    of their images.
    """
    n = a.apex.size
    if isinstance(a, Cospan):
        new = [-1] * n
        k = 0
        for p in a.legL.table + a.legR.table:
            if new[p] < 0:
                new[p] = k
                k += 1
        for p in range(n):
            if new[p] < 0:
                new[p] = k
                k += 1
        return Cospan(
            a.left,
            a.right,
            FinSetObj(n),
            FinFn([new[p] for p in a.legL.table], n, a.left),
            FinFn([new[p] for p in a.legR.table], n, a.right),
        )
    order = sorted(range(n), key=lambda p: (a.legL.table[p], a.legR.table[p]))
    return Span(
        a.left,
        a.right,
        FinSetObj(n),
        FinFn([a.legL.table[p] for p in order], a.left, n),
        FinFn([a.legR.table[p] for p in order], a.right, n),
    )


def iso_eq(a: Arrow, b: Arrow) -> bool:
    """Equality of isomorphism classes: same feet, and an apex bijection
    commuting with both legs."""
    if type(a) is not type(b):
        return False
    if a.left.size != b.left.size or a.right.size != b.right.size or a.apex.size != b.apex.size:
        return False
    ca, cb = canonical(a), canonical(b)
    return ca.legL.table == cb.legL.table and ca.legR.table == cb.legR.table


# -- objects ----------------------------------------------------------------


def unit_obj(mode: Mode) -> FinSetObj:
    return FinSetObj(0 if mode == "cospan" else 1)


def tensor_obj(mode: Mode, *objs: ObjLike) -> FinSetObj:
    if mode == "cospan":
        return FinSetObj(sum(as_obj(o).size for o in objs))
    n = 1
    for o in objs:
        n *= as_obj(o).size
    return FinSetObj(n)


# -- generators -------------------------------------------------------------


def lift(f: FinFn, direction: Literal["forward", "backward"] = "forward", mode: Mode = "cospan") -> Arrow:
    """The arrow ``f`` seen as a cospan ``(f, 1)`` or span ``(1, f)``; backward
    gives the reverse."""
    if mode == "cospan":
        a = Cospan(f.dom, f.cod, f.cod, f, fn_identity(f.cod))
    else:
        a = Span(f.dom, f.cod, f.dom, fn_identity(f.dom), f)
    return reverse(a) if direction == "backward" else a


def reverse(a: Arrow) -> Arrow:
    return type(a)(a.right, a.left, a.apex, a.legR, a.legL)


def identity(a: ObjLike, mode: Mode = "cospan") -> Arrow:
    return lift(fn_identity(as_obj(a)), "forward", mode)


def symmetry(a: ObjLike, b: ObjLike, mode: Mode = "cospan") -> Arrow:
    """Block swap ``A (x) B -> B (x) A``."""
    a, b = as_obj(a), as_obj(b)
    if mode == "cospan":
        table = [b.size + i for i in range(a.size)] + list(range(b.size))
        f = FinFn(table, a.size + b.size)
    else:
        table = [j * a.size + i for i in range(a.size) for j in range(b.size)]
        f = FinFn(table, a.size * b.size)
    return lift(f, "forward", mode)


def _mult_map(a: FinSetObj, mode: Mode) -> FinFn:
    # cospan: codiagonal A+A -> A; span: diagonal A -> AxA (reversed on lift)
    return codiagonal(a) if mode == "cospan" else diagonal(a)


def _unit_map(a: FinSetObj, mode: Mode) -> FinFn:
    return initial_map(a) if mode == "cospan" else terminal_map(a)


def constant(kind: Kind | str, a: ObjLike, mode: Mode = "cospan", b: ObjLike | None = None) -> Arrow:
    """The structural constants of the separable algebra on ``a``.

    ``b`` is only used by ``Kind.SYM``.
    """
    kind = Kind(kind) if isinstance(kind, str) else kind
    a = as_obj(a)
    if kind is Kind.ID:
        return identity(a, mode)
    if kind is Kind.SYM:
        return symmetry(a, a if b is None else b, mode)
    if mode == "cospan":
        mult = lift(_mult_map(a, mode), "forward", mode)
        unit = lift(_unit_map(a, mode), "forward", mode)
    else:
        mult = lift(_mult_map(a, mode), "backward", mode)
        unit = lift(_unit_map(a, mode), "backward", mode)
    if kind is Kind.MULT:
        return mult
    if kind is Kind.COMULT:
        return reverse(mult)
    if kind is Kind.UNIT:
        return unit
    if kind is Kind.COUNIT:
        return reverse(unit)
    if kind is Kind.ETA:
        return compose(unit, reverse(mult))
    if kind is Kind.EPS:
        return compose(mult, reverse(unit))
    raise ValueError(kind)  # pragma: no cover


# -- composition and tensor -------------------------------------------------


def _check_same_type(a: Arrow, b: Arrow) -> None:
    if type(a) is not type(b):
        raise TypeError(f"cannot combine a {type(a).__name__} with a {type(b).__name__}")


def compose(a: Arrow, b: Arrow) -> Arrow:
    """``a`` then ``b``: pushout over the shared foot (pullback for spans)."""
    _check_same_type(a, b)
    if a.right.size != b.left.size:
        raise BoundaryError(f"cannot compose: right foot {a.right} != left foot {b.left}")
    if isinstance(a, Cospan):
        pa, pb = pushout(a.legR, b.legL)
        out = Cospan(a.left, b.right, pa.cod, compose_fn(a.legL, pa), compose_fn(b.legR, pb))
    else:
        pa, pb = pullback(a.legR, b.legL)
        out = Span(a.left, b.right, pa.dom, compose_fn(pa, a.legL), compose_fn(pb, b.legR))
    return canonical(out)


def tensor(a: Arrow, b: Arrow) -> Arrow:
    _check_same_type(a, b)
    if isinstance(a, Cospan):
        return canonical(
            Cospan(
                FinSetObj(a.left.size + b.left.size),
                FinSetObj(a.right.size + b.right.size),
                FinSetObj(a.apex.size + b.apex.size),
                fn_sum(a.legL, b.legL),
                fn_sum(a.legR, b.legR),
            )
        )
    return canonical(
        Span(
            FinSetObj(a.left.size * b.left.size),
            FinSetObj(a.right.size * b.right.size),
            FinSetObj(a.apex.size * b.apex.size),
            fn_product(a.legL, b.legL),
            fn_product(a.legR, b.legR),
        )
    )


def tensor_all(arrows, mode: Mode) -> Arrow:
    out = identity(unit_obj(mode), mode)
    for a in arrows:
        out = tensor(out, a)
    return out


def compose_all(arrows) -> Arrow:
    arrows = list(arrows)
    out = arrows[0]
    for a in arrows[1:]:
        out = compose(out, a)
    return out
