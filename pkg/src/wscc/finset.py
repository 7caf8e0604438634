"""The category of finite sets: ordinals, total functions, and the finite
colimit/limit primitives everything else is built from.

Objects are ordinals ``{0, ..., n-1}``; a label is display-only and does not
take part in equality.  All values are immutable.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence, Union

__all__ = [
    "BoundaryError",
    "FinSetObj",
    "FinFn",
    "UnionFind",
    "as_obj",
    "identity",
    "compose_fn",
    "coproduct",
    "cotuple",
    "fn_sum",
    "codiagonal",
    "initial_map",
    "quotient",
    "coequalizer",
    "pushout",
    "product",
    "tuple_fn",
    "fn_product",
    "diagonal",
    "terminal_map",
    "equalizer",
    "pullback",
]


class BoundaryError(ValueError):
    """Raised when two arrows (or cospans, or expressions) do not fit together."""


@dataclass(frozen=True)
class FinSetObj:
    size: int
    label: str | None = field(default=None, compare=False)

    def __post_init__(self):
        if not isinstance(self.size, int) or self.size < 0:
            raise ValueError(f"object size must be a non-negative int, got {self.size!r}")

    def __str__(self) -> str:
        return f"[{self.size}]"

    def __len__(self) -> int:
        return self.size


ObjLike = Union[FinSetObj, int]


def as_obj(x: ObjLike) -> FinSetObj:
    return x if isinstance(x, FinSetObj) else FinSetObj(x)


@dataclass(frozen=True, init=False)
class FinFn:
    """A total function ``dom -> cod`` stored as a lookup table."""

    dom: FinSetObj
    cod: FinSetObj
    table: tuple[int, ...]

    def __init__(self, table: Iterable[int], cod: ObjLike, dom: ObjLike | None = None):
        table = tuple(int(t) for t in table)
        cod = as_obj(cod)
        dom = as_obj(len(table) if dom is None else dom)
        if len(table) != dom.size:
            raise ValueError(f"table of length {len(table)} for domain {dom}")
        for t in table:
            if not 0 <= t < cod.size:
                raise ValueError(f"entry {t} out of range for codomain {cod}")
        object.__setattr__(self, "dom", dom)
        object.__setattr__(self, "cod", cod)
        object.__setattr__(self, "table", table)

    def __call__(self, i: int) -> int:
        return self.table[i]

    def __len__(self) -> int:
        return len(self.table)

    def __str__(self) -> str:
        return f"[{','.join(map(str, self.table))}]:{self.dom}->{self.cod}"

    __repr__ = __str__

    def then(self, g: "FinFn") -> "FinFn":
        return compose_fn(self, g)

    def is_surjective(self) -> bool:
        return len(set(self.table)) == self.cod.size

    def is_injective(self) -> bool:
        return len(set(self.table)) == len(self.table)


def identity(a: ObjLike) -> FinFn:
    a = as_obj(a)
    return FinFn(range(a.size), a, a)


def compose_fn(f: FinFn, g: FinFn) -> FinFn:
    """``f`` then ``g``."""
    if f.cod.size != g.dom.size:
        raise BoundaryError(f"cannot compose {f} with {g}: {f.cod} != {g.dom}")
    gt = g.table
    return FinFn([gt[t] for t in f.table], g.cod, f.dom)


# -- colimits ---------------------------------------------------------------


def coproduct(a: ObjLike, b: ObjLike) -> tuple[FinSetObj, FinFn, FinFn]:
    a, b = as_obj(a), as_obj(b)
    s = FinSetObj(a.size + b.size)
    inj1 = FinFn(range(a.size), s, a)
    inj2 = FinFn(range(a.size, s.size), s, b)
    return s, inj1, inj2


def cotuple(*fns: FinFn) -> FinFn:
    """The map out of the sum of the domains, ``(f1 | f2 | ...)``."""
    if not fns:
        raise ValueError("cotuple of no maps needs an explicit codomain; use initial_map")
    cod = fns[0].cod
    table: list[int] = []
    for f in fns:
        if f.cod.size != cod.size:
            raise BoundaryError(f"cotuple legs disagree on codomain: {fns[0]} vs {f}")
        table.extend(f.table)
    return FinFn(table, cod)


def fn_sum(*fns: FinFn) -> FinFn:
    """Blockwise sum ``f1 + f2 + ...``."""
    table: list[int] = []
    offset = 0
    for f in fns:
        table.extend(t + offset for t in f.table)
        offset += f.cod.size
    return FinFn(table, offset)


def codiagonal(a: ObjLike, copies: int = 2) -> FinFn:
    a = as_obj(a)
    return FinFn([i for _ in range(copies) for i in range(a.size)], a)


def initial_map(a: ObjLike) -> FinFn:
    return FinFn((), as_obj(a), 0)


class UnionFind:
    """Disjoint sets over ``range(n)`` with path compression and union by size."""

    def __init__(self, n: int):
        self.parent = list(range(n))
        self.size = [1] * n

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x: int, y: int) -> bool:
        x, y = self.find(x), self.find(y)
        if x == y:
            return False
        if self.size[x] < self.size[y]:
            x, y = y, x
        self.parent[y] = x
        self.size[x] += self.size[y]
        return True

    def classes(self) -> list[int]:
        """Class index of every element, classes numbered by least member."""
        index: dict[int, int] = {}
        out = []
        for x in range(len(self.parent)):
            r = self.find(x)
            if r not in index:
                index[r] = len(index)
            out.append(index[r])
        return out


def quotient(n: int, pairs: Iterable[tuple[int, int]]) -> FinFn:
    """Canonical surjection from ``[n]`` onto the classes of the equivalence
    relation generated by ``pairs``; near-linear in ``n + len(pairs)``."""
    uf = UnionFind(n)
    for x, y in pairs:
        uf.union(x, y)
    classes = uf.classes()
    return FinFn(classes, max(classes) + 1 if classes else 0, n)


def coequalizer(f: FinFn, g: FinFn) -> FinFn:
    if f.dom.size != g.dom.size or f.cod.size != g.cod.size:
        raise BoundaryError(f"coequalizer of {f} and {g}: boundaries differ")
    return quotient(f.cod.size, zip(f.table, g.table))


def pushout(f: FinFn, g: FinFn) -> tuple[FinFn, FinFn]:
    """Pushout of ``B <-f- A -g-> C``; returns the legs ``B -> P`` and ``C -> P``."""
    if f.dom.size != g.dom.size:
        raise BoundaryError(f"pushout of {f} and {g}: domains differ")
    nb = f.cod.size
    q = quotient(nb + g.cod.size, ((x, nb + y) for x, y in zip(f.table, g.table)))
    t = q.table
    return FinFn(t[:nb], q.cod, f.cod), FinFn(t[nb:], q.cod, g.cod)


# -- limits -----------------------------------------------------------------


def product(a: ObjLike, b: ObjLike) -> tuple[FinSetObj, FinFn, FinFn]:
    """Row-major product: the pair ``(i, j)`` is element ``i * |b| + j``."""
    a, b = as_obj(a), as_obj(b)
    p = FinSetObj(a.size * b.size)
    proj1 = FinFn([i for i in range(a.size) for _ in range(b.size)], a, p)
    proj2 = FinFn([j for _ in range(a.size) for j in range(b.size)], b, p)
    return p, proj1, proj2


def tuple_fn(f: FinFn, g: FinFn) -> FinFn:
    """``<f, g>: X -> B x C`` for ``f: X -> B`` and ``g: X -> C``."""
    if f.dom.size != g.dom.size:
        raise BoundaryError(f"tuple of {f} and {g}: domains differ")
    m = g.cod.size
    return FinFn([x * m + y for x, y in zip(f.table, g.table)], f.cod.size * m, f.dom)


def fn_product(*fns: FinFn) -> FinFn:
    """Row-major product map ``f1 x f2 x ...``."""
    table = [0]
    cod = 1
    for f in fns:
        m = f.cod.size
        table = [t * m + x for t in table for x in f.table]
        cod *= m
    return FinFn(table, cod)


def diagonal(a: ObjLike) -> FinFn:
    a = as_obj(a)
    return FinFn([i * a.size + i for i in range(a.size)], a.size * a.size, a)


def terminal_map(a: ObjLike) -> FinFn:
    return FinFn([0] * as_obj(a).size, 1)


def equalizer(f: FinFn, g: FinFn) -> FinFn:
    """Inclusion of ``{x : f(x) = g(x)}``, enumerated in increasing order."""
    if f.dom.size != g.dom.size or f.cod.size != g.cod.size:
        raise BoundaryError(f"equalizer of {f} and {g}: boundaries differ")
    keep = [x for x, (y, z) in enumerate(zip(f.table, g.table)) if y == z]
    return FinFn(keep, f.dom, len(keep))


def pullback(f: FinFn, g: FinFn) -> tuple[FinFn, FinFn]:
    """Pullback of ``B -f-> A <-g- C`` as the equalizer inside ``B x C``."""
    if f.cod.size != g.cod.size:
        raise BoundaryError(f"pullback of {f} and {g}: codomains differ")
    _, p1, p2 = product(f.dom, g.dom)
    e = equalizer(p1.then(f), p2.then(g))
    return e.then(p1), e.then(p2)


def sum_objects(objs: Sequence[ObjLike]) -> FinSetObj:
    return FinSetObj(sum(as_obj(o).size for o in objs))


def product_objects(objs: Sequence[ObjLike]) -> FinSetObj:
    n = 1
    for o in objs:
        n *= as_obj(o).size
    return FinSetObj(n)
