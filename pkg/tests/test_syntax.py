import random

import pytest

from wscc import cospan as cs
from wscc.cospan import Kind
from wscc.expr import Const, Seq, Ten, compile_diagram, evaluate
from wscc.random_gen import rand_dcospan
from wscc.syntax import ParseError, format_expr, format_program, parse_expr, parse_program

PRE = "A = 2\nB = 3\nf : A -> B = [0,1]\ng : A -> B = [1,2]\n"


def test_semicolon_and_dot_are_mirror_images():
    p1 = parse_program(PRE + "comult(A) ; (gen(f) * gen(g)) ; mult(B)")
    p2 = parse_program(PRE + "mult(B) . (gen(f)+gen(g)) . comult(A)")
    assert _flatten(p1.expr) == _flatten(p2.expr)
    assert cs.iso_eq(evaluate(p1.expr), evaluate(p2.expr))


def _flatten(e):
    if isinstance(e, Seq):
        return _flatten(e.first) + _flatten(e.second)
    return [e]


def test_tensor_binds_tighter():
    e = parse_expr(PRE + "A * A ; mult(A)")
    assert isinstance(e, Seq) and isinstance(e.first, Ten)


def test_identity_and_unit_names():
    e = parse_expr(PRE + "id(A*B) ; I * A * B")
    assert cs.iso_eq(evaluate(e), cs.identity(5))
    assert parse_expr(PRE + "eta(I)") == Const(Kind.ETA, ())


def test_sym_and_disc():
    e = parse_expr(PRE + "sym(A, B) ; disc([1,0] : B*A -> A*B)")
    assert cs.iso_eq(evaluate(e), cs.constant(Kind.ID, 5))
    e = parse_expr(PRE + "codisc([0,0] : A*A -> A)")
    assert cs.iso_eq(evaluate(e), cs.constant(Kind.COMULT, 2))


def test_comments_and_blank_lines():
    e = parse_expr("# objects\nA = 1\n\nmult(A) # merge\n")
    assert e == Const(Kind.MULT, (e.objects[0],))


@pytest.mark.parametrize(
    "text, line, col",
    [
        (PRE + "gen(h)", 5, 5),
        (PRE + "mult(A) ;\n  gen(f) ; frob(B)", 6, 12),
        (PRE + "mult(A", 5, 7),
        (PRE + "comult(A) $ A", 5, 11),
        ("A = 1\nf : A -> Q = [0]\nA", 2, 10),
    ],
)
def test_errors_carry_positions(text, line, col):
    with pytest.raises(ParseError) as info:
        parse_program(text)
    assert (info.value.line, info.value.col) == (line, col)
    assert f"line {line}, column {col}" in str(info.value)


def test_bad_generator_table():
    with pytest.raises(ParseError):
        parse_program("A = 1\nB = 1\nf : A -> B = [3]\ngen(f)")


def test_round_trip_compiled_programs():
    rng = random.Random(0)
    for _ in range(100):
        c = rand_dcospan(rng, 3, 3, 3)
        e = compile_diagram(c)
        text = format_program(e)
        again = parse_program(text).expr
        assert format_program(again) == text
        assert cs.iso_eq(evaluate(again), evaluate(e))


def test_format_expr_brackets():
    e = parse_expr(PRE + "comult(A) ; (gen(f) * gen(g)) ; mult(B)")
    assert format_expr(e) == "comult(A) ; (gen(f) * gen(g)) ; mult(B)"
