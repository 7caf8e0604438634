"""Automata as cospans of labelled graphs, and their images as categories
enriched in languages.

The pipeline is: relabel letters as singleton regexes, take the colimit
(the star-closure of the label matrix), then keep only the objects the feet
point at.  Composition of such cospans only ever needs the identification
of two objects, whose hom formula uses union, concatenation and star.
"""
from __future__ import annotations

import warnings
from dataclasses import dataclass
from typing import Sequence, Union as TUnion

from .finset import BoundaryError
from .regex import (
    EMPTY,
    EPS,
    Epsilon,
    Letter,
    Regex,
    Union,
    bounded_language,
    concat,
    nullable,
    star,
    union,
    union_all,
)

__all__ = [
    "EPS_LABEL",
    "LabelledGraph",
    "LangCat",
    "LangCospan",
    "matrix_star",
    "phi1",
    "phi2",
    "phi3",
    "identify_objects",
    "lang_tensor",
    "lang_compose",
    "corel_compose",
    "kleene_pipeline",
    "kleene_compositional",
    "nfa_language",
    "nfa_accepts",
    "bounded_equiv",
]

EPS_LABEL = "eps"

Label = TUnion[str, None, Regex]


@dataclass(frozen=True)
class LabelledGraph:
    """States, labelled edges ``(src, label, tgt)``, and the two feet.

    Labels are alphabet symbols, ``None`` for an epsilon move, or (after
    ``phi1``) regexes.
    """

    alphabet: tuple[str, ...]
    states: tuple[str, ...]
    edges: tuple[tuple[int, Label, int], ...] = ()
    initial: tuple[int, ...] = ()
    final: tuple[int, ...] = ()

    def __post_init__(self):
        for name in ("alphabet", "states", "edges", "initial", "final"):
            object.__setattr__(self, name, tuple(getattr(self, name)))
        n = len(self.states)
        for s, _, t in self.edges:
            if not (0 <= s < n and 0 <= t < n):
                raise BoundaryError(f"edge {s}->{t} refers to a missing state")
        for v in self.initial + self.final:
            if not 0 <= v < n:
                raise BoundaryError(f"foot refers to missing state {v}")

    def with_feet(self, initial: Sequence[int], final: Sequence[int]) -> "LabelledGraph":
        return LabelledGraph(self.alphabet, self.states, self.edges, tuple(initial), tuple(final))


Matrix = list[list[Regex]]


@dataclass(frozen=True)
class LangCat:
    """A category enriched in languages: named objects, regex homs."""

    objects: tuple[str, ...]
    hom: tuple[tuple[Regex, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "objects", tuple(self.objects))
        object.__setattr__(self, "hom", tuple(tuple(row) for row in self.hom))
        n = len(self.objects)
        if len(self.hom) != n or any(len(row) != n for row in self.hom):
            raise ValueError("hom matrix must be square over the objects")

    def __len__(self) -> int:
        return len(self.objects)


@dataclass(frozen=True)
class LangCospan:
    """Feet are lists of object indices into the centre.  A corelation is the
    special case where ``left + right`` is a bijection onto the objects."""

    center: LangCat
    left: tuple[int, ...] = ()
    right: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "left", tuple(self.left))
        object.__setattr__(self, "right", tuple(self.right))

    def is_corelation(self) -> bool:
        feet = self.left + self.right
        return sorted(feet) == list(range(len(self.center)))

    def block(self) -> list[list[Regex]]:
        """Homs from each left foot element to each right foot element."""
        h = self.center.hom
        return [[h[i][j] for j in self.right] for i in self.left]


# -- closure ----------------------------------------------------------------


def matrix_star(m: Sequence[Sequence[Regex]]) -> Matrix:
    """Reflexive-transitive closure of a regex matrix by eliminating one pivot
    state at a time, in state order.

    For pivot ``k`` with loop closure ``s = m[k][k]*``, paths through ``k``
    are added as ``m[i][k] . s . m[k][j]``; the pivot's own row and column
    absorb ``s``.  Identities are added on the diagonal at the end.
    """
    n = len(m)
    if any(len(row) != n for row in m):
        raise ValueError("matrix_star needs a square matrix")
    a = [list(row) for row in m]
    for k in range(n):
        s = star(a[k][k])
        col = [a[i][k] for i in range(n)]
        row = [a[k][j] for j in range(n)]
        for i in range(n):
            if i == k or col[i] == EMPTY:
                continue
            left = concat(col[i], s)
            for j in range(n):
                if j == k or row[j] == EMPTY:
                    continue
                a[i][j] = union(a[i][j], concat(left, row[j]))
        for i in range(n):
            if i != k:
                a[i][k] = concat(col[i], s)
                a[k][i] = concat(s, row[i])
        a[k][k] = concat(col[k], s)
    for i in range(n):
        a[i][i] = union(EPS, a[i][i])
    return a


# -- the three functors -----------------------------------------------------


def phi1(g: LabelledGraph) -> LabelledGraph:
    """Letters become singleton regexes, epsilon moves become ``e``."""
    edges = []
    for s, lab, t in g.edges:
        if lab is None or lab == EPS_LABEL:
            r: Regex = EPS
        elif isinstance(lab, str):
            if lab not in g.alphabet:
                raise ValueError(f"label {lab!r} is not in the alphabet {list(g.alphabet)}")
            r = Letter(lab)
        else:
            r = lab
        edges.append((s, r, t))
    return LabelledGraph(g.alphabet, g.states, tuple(edges), g.initial, g.final)


def _label_matrix(g: LabelledGraph) -> Matrix:
    n = len(g.states)
    m: Matrix = [[EMPTY] * n for _ in range(n)]
    for s, r, t in g.edges:
        m[s][t] = union(m[s][t], r)
    return m


def phi2(g: LabelledGraph) -> LangCospan:
    """Colimit of a regex-labelled graph: objects are states, homs the
    languages of paths (parallel edges are unioned first)."""
    if any(isinstance(lab, str) or lab is None for _, lab, _ in g.edges):
        g = phi1(g)
    return LangCospan(LangCat(g.states, matrix_star(_label_matrix(g))), g.initial, g.final)


def phi3(c: LangCospan) -> LangCospan:
    """Bijective-on-objects / fully-faithful factorization of the feet: the new
    objects are the foot elements themselves, with homs pulled back from the
    centre."""
    feet = c.left + c.right
    names = [f"in{k}:{c.center.objects[v]}" for k, v in enumerate(c.left)]
    names += [f"out{k}:{c.center.objects[v]}" for k, v in enumerate(c.right)]
    h = c.center.hom
    hom = [[h[u][v] for v in feet] for u in feet]
    nl = len(c.left)
    return LangCospan(LangCat(names, hom), range(nl), range(nl, len(feet)))


# -- composition ------------------------------------------------------------


def identify_objects(x_cat: LangCat, x: int, y: int) -> LangCat:
    """Quotient identifying objects ``x`` and ``y`` (the merged object keeps
    ``x``'s name and position, ``y`` is removed).

    For surviving ``z, w`` the new hom is
    ``X(z,w) + (X(z,x)+X(z,y)) . L* . (X(x,w)+X(y,w))`` with
    ``L = X(x,x)+X(x,y)+X(y,x)+X(y,y)``; where the merged object itself is
    ``z`` or ``w`` its row or column is the union of the two old ones.
    """
    n = len(x_cat)
    if not (0 <= x < n and 0 <= y < n):
        raise IndexError(f"objects {x}, {y} out of range for {n} objects")
    if x == y:
        warnings.warn("identify_objects called with x == y; returning the category unchanged", stacklevel=2)
        return x_cat
    h = x_cat.hom
    loops = union_all((h[x][x], h[x][y], h[y][x], h[y][y]))
    s = star(union_all(_summands(loops)))
    keep = [v for v in range(n) if v != y]
    into = {z: union(h[z][x], h[z][y]) for z in keep if z != x}
    out_of = {w: union(h[x][w], h[y][w]) for w in keep if w != x}
    hom: Matrix = []
    for z in keep:
        row = []
        for w in keep:
            if z == x and w == x:
                # L + L.L*.L, which is L* when L already contains e
                row.append(s if nullable(loops) else concat(loops, s))
            elif z == x:
                row.append(concat(s, out_of[w]))
            elif w == x:
                row.append(concat(into[z], s))
            else:
                row.append(union(h[z][w], concat(concat(into[z], s), out_of[w])))
        hom.append(row)
    return LangCat([x_cat.objects[v] for v in keep], hom)


def _summands(r: Regex) -> list[Regex]:
    """Top-level union summands other than ``e`` (they do not change a star)."""
    if isinstance(r, Union):
        return _summands(r.left) + _summands(r.right)
    return [] if isinstance(r, Epsilon) else [r]


def lang_tensor(a: LangCospan, b: LangCospan) -> LangCospan:
    na, nb = len(a.center), len(b.center)
    hom: Matrix = []
    for i in range(na):
        hom.append(list(a.center.hom[i]) + [EMPTY] * nb)
    for i in range(nb):
        hom.append([EMPTY] * na + list(b.center.hom[i]))
    center = LangCat(a.center.objects + b.center.objects, hom)
    return LangCospan(
        center,
        a.left + tuple(v + na for v in b.left),
        a.right + tuple(v + na for v in b.right),
    )


def _identify_all(c: LangCat, pairs: Sequence[tuple[int, int]]) -> tuple[LangCat, list[int]]:
    """Identify each pair in order; returns the quotient and where every
    original object ended up."""
    where = list(range(len(c)))
    for p, q in pairs:
        x, y = where[p], where[q]
        if x == y:
            continue
        c = identify_objects(c, x, y)
        merged = x - (x > y)
        where = [merged if v == y else v - (v > y) for v in where]
    return c, where


def lang_compose(a: LangCospan, b: LangCospan) -> LangCospan:
    """Glue ``a.right`` to ``b.left`` elementwise, in foot order."""
    if len(a.right) != len(b.left):
        raise BoundaryError(f"foot mismatch: {len(a.right)} vs {len(b.left)} objects")
    na = len(a.center)
    both = lang_tensor(LangCospan(a.center, a.left, ()), LangCospan(b.center, (), b.right))
    pairs = [(x, na + y) for x, y in zip(a.right, b.left)]
    center, where = _identify_all(both.center, pairs)
    return LangCospan(center, [where[v] for v in both.left], [where[v] for v in both.right])


def corel_compose(a: LangCospan, b: LangCospan) -> LangCospan:
    """Composite of corelations: compose the cospans, then refactor."""
    return phi3(lang_compose(a, b))


# -- the pipeline -----------------------------------------------------------


def kleene_pipeline(g: LabelledGraph) -> list[list[Regex]]:
    """Regex for every (initial, final) pair: the initial x final block of
    phi3(phi2(phi1(g)))."""
    return phi3(phi2(phi1(g))).block()


def kleene_compositional(g: LabelledGraph) -> list[list[Regex]]:
    """Same table, assembled the way the wscc structure sees it: one small
    category per edge, tensored with one object per state, then every copy
    of a state identified with that state."""
    g = phi1(g)
    n = len(g.states)
    base = LangCospan(LangCat(g.states, [[EPS if i == j else EMPTY for j in range(n)] for i in range(n)]), g.initial, g.final)
    pairs: list[tuple[int, int]] = []
    for s, r, t in g.edges:
        off = len(base.center)
        if s == t:
            piece = LangCat([g.states[s]], [[star(r)]])
            pairs.append((s, off))
        else:
            piece = LangCat([g.states[s], g.states[t]], [[EPS, r], [EMPTY, EPS]])
            pairs += [(s, off), (t, off + 1)]
        base = lang_tensor(base, LangCospan(piece))
    center, where = _identify_all(base.center, pairs)
    return phi3(LangCospan(center, [where[v] for v in base.left], [where[v] for v in base.right])).block()


# -- automaton semantics ----------------------------------------------------


def _eps_closure(g: LabelledGraph, states: set[int]) -> frozenset[int]:
    stack = list(states)
    seen = set(states)
    while stack:
        s = stack.pop()
        for a, lab, t in g.edges:
            if a == s and (lab is None or lab == EPS_LABEL or isinstance(lab, Epsilon)) and t not in seen:
                seen.add(t)
                stack.append(t)
    return frozenset(seen)


def _step(g: LabelledGraph, states: frozenset[int], symbol: str) -> frozenset[int]:
    nxt = {t for s, lab, t in g.edges if s in states and (lab == symbol or lab == Letter(symbol))}
    return _eps_closure(g, nxt)


def nfa_accepts(g: LabelledGraph, word: Sequence[str]) -> bool:
    cur = _eps_closure(g, set(g.initial))
    for a in word:
        cur = _step(g, cur, a)
    return bool(cur & set(g.final))


def nfa_language(g: LabelledGraph, max_len: int) -> frozenset[tuple[str, ...]]:
    """Accepted words of length at most ``max_len`` (subset simulation over
    the word tree)."""
    final = set(g.final)
    out = set()
    layer = [((), _eps_closure(g, set(g.initial)))]
    for depth in range(max_len + 1):
        nxt = []
        for w, cur in layer:
            if cur & final:
                out.add(w)
            if depth < max_len and cur:
                nxt.extend((w + (a,), _step(g, cur, a)) for a in g.alphabet)
        layer = nxt
    return frozenset(out)


def bounded_equiv(r: Regex, g: LabelledGraph, max_len: int) -> bool:
    """Regex and automaton agree on every word of length at most ``max_len``."""
    return bounded_language(r, max_len) == nfa_language(g, max_len)
