import random
import re

import pytest
from hypothesis import given, settings, strategies as st

from wscc.random_gen import rand_regex
from wscc.regex import (
    EMPTY,
    EPS,
    Concat,
    Letter,
    Star,
    Union,
    all_words,
    bounded_language,
    concat,
    format_regex,
    matches,
    nullable,
    parse_regex,
    simplify,
    star,
    union,
    uses_only_kleene_ops,
)

a, b = Letter("a"), Letter("b")


def to_python_re(r) -> str:
    """Translate into Python's regex dialect (an independent matcher)."""
    if r == EMPTY:
        return "(?!)"
    if r == EPS:
        return ""
    if isinstance(r, Letter):
        return re.escape(r.symbol)
    if isinstance(r, Union):
        return f"(?:{to_python_re(r.left)}|{to_python_re(r.right)})"
    if isinstance(r, Concat):
        return f"(?:{to_python_re(r.left)}{to_python_re(r.right)})"
    return f"(?:{to_python_re(r.body)})*"


def re_language(r, max_len, alphabet=("a", "b")):
    pat = re.compile(to_python_re(r))
    return {w for w in all_words(alphabet, max_len) if pat.fullmatch("".join(w))}


regexes = st.builds(lambda seed, d: rand_regex(random.Random(seed), d), st.integers(0, 10**6), st.integers(0, 5))


def test_canonical_printing():
    r = Union(Concat(a, Star(b)), EPS)
    assert format_regex(r) == "((a.(b)*)+e)"
    assert format_regex(EMPTY) == "0"
    assert parse_regex("((a.(b)*)+e)") == r


def test_parse_precedence():
    assert parse_regex("a+b.a*") == Union(a, Concat(b, Star(a)))
    with pytest.raises(ValueError):
        parse_regex("(a+b")
    with pytest.raises(ValueError):
        parse_regex("a+")


@given(regexes)
def test_print_parse_round_trip(r):
    assert parse_regex(format_regex(r)) == r


def test_rewrite_rules():
    assert union(a, EMPTY) == a and union(EMPTY, a) == a
    assert concat(a, EMPTY) == EMPTY and concat(a, EPS) == a and concat(EPS, a) == a
    assert star(EMPTY) == EPS and star(EPS) == EPS
    assert union(EPS, Concat(a, Star(a))) == Star(a)
    assert union(EPS, Star(a)) == Star(a)
    assert star(Union(EPS, a)) == Star(a)
    assert format_regex(simplify(Union(EPS, Concat(a, Star(a))))) == "(a)*"


@settings(max_examples=300)
@given(regexes)
def test_simplifier_is_sound(r):
    s = simplify(r)
    assert bounded_language(s, 8) == bounded_language(r, 8)
    assert simplify(s) == s


@settings(max_examples=150)
@given(regexes)
def test_bounded_language_agrees_with_python_re(r):
    assert bounded_language(r, 6) == re_language(r, 6)


@settings(max_examples=150)
@given(regexes)
def test_membership_agrees_with_python_re(r):
    lang = re_language(r, 5)
    for w in all_words("ab", 5):
        assert matches(r, w) == (w in lang)
    assert nullable(r) == matches(r, ())


def test_kleene_ops_only():
    assert uses_only_kleene_ops(Star(Union(a, Concat(b, EPS))))
    assert not uses_only_kleene_ops("a")


def test_all_words_count():
    assert len(all_words("ab", 3)) == 1 + 2 + 4 + 8
