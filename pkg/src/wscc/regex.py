"""Regular expressions over a finite alphabet: syntax, a small sound
simplifier, canonical printing, and bounded-length semantics."""
from __future__ import annotations

import re
from dataclasses import dataclass
import typing
from typing import Iterable

__all__ = [
    "Empty",
    "Epsilon",
    "Letter",
    "Union",
    "Concat",
    "Star",
    "Regex",
    "EMPTY",
    "EPS",
    "union",
    "concat",
    "star",
    "union_all",
    "simplify",
    "nullable",
    "size",
    "format_regex",
    "parse_regex",
    "matches",
    "bounded_language",
    "all_words",
    "uses_only_kleene_ops",
]


@dataclass(frozen=True)
class Empty:
    pass


@dataclass(frozen=True)
class Epsilon:
    pass


@dataclass(frozen=True)
class Letter:
    symbol: str


@dataclass(frozen=True)
class Union:
    left: "Regex"
    right: "Regex"


@dataclass(frozen=True)
class Concat:
    left: "Regex"
    right: "Regex"


@dataclass(frozen=True)
class Star:
    body: "Regex"


Regex = typing.Union[Empty, Epsilon, Letter, Union, Concat, Star]

EMPTY = Empty()
EPS = Epsilon()


# -- smart constructors (the simplifier's rewrite rules) --------------------


def _is_star_of(r: Regex, body: Regex) -> bool:
    return isinstance(r, Star) and r.body == body


def union(a: Regex, b: Regex) -> Regex:
    if isinstance(a, Empty):
        return b
    if isinstance(b, Empty):
        return a
    if a == b:
        return a
    # e + r.r* -> r*   and   e + r* -> r*
    for x, y in ((a, b), (b, a)):
        if isinstance(x, Epsilon):
            if isinstance(y, Star):
                return y
            if isinstance(y, Concat) and _is_star_of(y.right, y.left):
                return y.right
    return Union(a, b)


def concat(a: Regex, b: Regex) -> Regex:
    if isinstance(a, Empty) or isinstance(b, Empty):
        return EMPTY
    if isinstance(a, Epsilon):
        return b
    if isinstance(b, Epsilon):
        return a
    return Concat(a, b)


def star(a: Regex) -> Regex:
    if isinstance(a, (Empty, Epsilon)):
        return EPS
    if isinstance(a, Star):
        return a
    # (e + r)* -> r*
    if isinstance(a, Union):
        if isinstance(a.left, Epsilon):
            return star(a.right)
        if isinstance(a.right, Epsilon):
            return star(a.left)
    return Star(a)


def union_all(rs: Iterable[Regex]) -> Regex:
    out: Regex = EMPTY
    for r in rs:
        out = union(out, r)
    return out


def _rebuild(r: Regex) -> Regex:
    if isinstance(r, Union):
        return union(_rebuild(r.left), _rebuild(r.right))
    if isinstance(r, Concat):
        return concat(_rebuild(r.left), _rebuild(r.right))
    if isinstance(r, Star):
        return star(_rebuild(r.body))
    return r


def simplify(r: Regex, max_rounds: int = 64) -> Regex:
    """Apply the rewrite rules bottom-up until nothing changes.  Every rule
    shrinks the tree, so the round cap is only a guard."""
    for _ in range(max_rounds):
        s = _rebuild(r)
        if s == r:
            return s
        r = s
    return r


def nullable(r: Regex) -> bool:
    if isinstance(r, (Epsilon, Star)):
        return True
    if isinstance(r, (Empty, Letter)):
        return False
    if isinstance(r, Union):
        return nullable(r.left) or nullable(r.right)
    return nullable(r.left) and nullable(r.right)


def size(r: Regex) -> int:
    if isinstance(r, (Union, Concat)):
        return 1 + size(r.left) + size(r.right)
    if isinstance(r, Star):
        return 1 + size(r.body)
    return 1


def uses_only_kleene_ops(r: Regex) -> bool:
    """True iff the tree is built from letters, e, 0 by union, concatenation
    and star alone."""
    if isinstance(r, (Empty, Epsilon, Letter)):
        return True
    if isinstance(r, (Union, Concat)):
        return uses_only_kleene_ops(r.left) and uses_only_kleene_ops(r.right)
    if isinstance(r, Star):
        return uses_only_kleene_ops(r.body)
    return False


# -- text form --------------------------------------------------------------


def format_regex(r: Regex) -> str:
    """Fully parenthesised: ``0``, ``e``, letters, ``(l+r)``, ``(l.r)``, ``(x)*``."""
    if isinstance(r, Empty):
        return "0"
    if isinstance(r, Epsilon):
        return "e"
    if isinstance(r, Letter):
        return r.symbol
    if isinstance(r, Union):
        return f"({format_regex(r.left)}+{format_regex(r.right)})"
    if isinstance(r, Concat):
        return f"({format_regex(r.left)}.{format_regex(r.right)})"
    return f"({format_regex(r.body)})*"


_RE_TOKEN = re.compile(r"\s*(?:([()+.*])|([^\s()+.*]+))")


def parse_regex(text: str) -> Regex:
    """Inverse of ``format_regex``; also accepts unparenthesised input with
    the usual precedence (star > concatenation > union)."""
    toks: list[str] = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _RE_TOKEN.match(text, pos)
        if not m:
            raise ValueError(f"bad regex at position {pos}: {text!r}")
        toks.append(m.group(1) or m.group(2))
        pos = m.end()
    i = 0

    def peek():
        return toks[i] if i < len(toks) else None

    def take():
        nonlocal i
        if i >= len(toks):
            raise ValueError(f"unexpected end of regex {text!r}")
        i += 1
        return toks[i - 1]

    def p_union():
        r = p_concat()
        while peek() == "+":
            take()
            r = Union(r, p_concat())
        return r

    def p_concat():
        r = p_star()
        while peek() == ".":
            take()
            r = Concat(r, p_star())
        return r

    def p_star():
        r = p_atom()
        while peek() == "*":
            take()
            r = Star(r)
        return r

    def p_atom():
        t = peek()
        if t is None:
            raise ValueError(f"unexpected end of regex {text!r}")
        take()
        if t == "(":
            r = p_union()
            if take() != ")":
                raise ValueError(f"unbalanced parentheses in {text!r}")
            return r
        if t == "0":
            return EMPTY
        if t == "e":
            return EPS
        if t in "+.*)":
            raise ValueError(f"unexpected {t!r} in {text!r}")
        return Letter(t)

    r = p_union()
    if i != len(toks):
        raise ValueError(f"trailing input in regex {text!r}")
    return r


# -- semantics --------------------------------------------------------------


def matches(r: Regex, word: Iterable[str]) -> bool:
    """Recursive membership test; star is unrolled at most ``len(word)`` times."""
    w = tuple(word)
    n = len(w)
    memo: dict[tuple[int, int], frozenset[int]] = {}

    def ends(x: Regex, i: int) -> frozenset[int]:
        key = (id(x), i)
        if key in memo:
            return memo[key]
        if isinstance(x, Empty):
            out: frozenset[int] = frozenset()
        elif isinstance(x, Epsilon):
            out = frozenset((i,))
        elif isinstance(x, Letter):
            out = frozenset((i + 1,)) if i < n and w[i] == x.symbol else frozenset()
        elif isinstance(x, Union):
            out = ends(x.left, i) | ends(x.right, i)
        elif isinstance(x, Concat):
            out = frozenset(k for j in ends(x.left, i) for k in ends(x.right, j))
        else:
            reached = {i}
            frontier = [i]
            for _ in range(n + 1):
                nxt = [k for j in frontier for k in ends(x.body, j) if k not in reached]
                if not nxt:
                    break
                reached.update(nxt)
                frontier = nxt
            out = frozenset(reached)
        memo[key] = out
        return out

    return n in ends(r, 0)


def all_words(alphabet: Iterable[str], max_len: int) -> list[tuple[str, ...]]:
    alphabet = list(alphabet)
    out: list[tuple[str, ...]] = [()]
    layer: list[tuple[str, ...]] = [()]
    for _ in range(max_len):
        layer = [w + (a,) for w in layer for a in alphabet]
        out.extend(layer)
    return out


def bounded_language(
    r: Regex,
    max_len: int,
    memo: dict[int, frozenset] | None = None,
) -> frozenset[tuple[str, ...]]:
    """All words of length at most ``max_len`` denoted by ``r``.

    ``memo`` is keyed by node identity, so it may be shared across regexes
    that share subtrees as long as they stay alive.
    """
    memo = {} if memo is None else memo

    def go(x: Regex) -> frozenset:
        key = id(x)
        if key in memo:
            return memo[key]
        if isinstance(x, Empty):
            out: frozenset = frozenset()
        elif isinstance(x, Epsilon):
            out = frozenset(((),))
        elif isinstance(x, Letter):
            out = frozenset(((x.symbol,),)) if max_len >= 1 else frozenset()
        elif isinstance(x, Union):
            out = go(x.left) | go(x.right)
        elif isinstance(x, Concat):
            out = _concat_sets(go(x.left), go(x.right), max_len)
        else:
            body = go(x.body) - {()}
            acc = {()}
            frontier = {()}
            while frontier:
                frontier = _concat_sets(frontier, body, max_len) - acc
                acc |= frontier
            out = frozenset(acc)
        memo[key] = out
        return out

    return go(r)


def _concat_sets(a, b, max_len: int) -> frozenset:
    by_len: dict[int, list] = {}
    for v in b:
        by_len.setdefault(len(v), []).append(v)
    out = set()
    for u in a:
        room = max_len - len(u)
        for k in range(room + 1):
            for v in by_len.get(k, ()):
                out.add(u + v)
    return frozenset(out)
