"""Text form of expressions.

A program is a preamble of object and generator declarations followed by one
expression::

    # objects and arrows
    A = 2
    B = 3
    f : A -> B = [0,1]
    g : A -> B = [1,2]
    comult(A) ; (gen(f) * gen(g)) ; mult(B)

``;`` composes left-to-right, ``.`` composes right-to-left (``a . b`` is
``b`` then ``a``), ``*`` and ``+`` are tensor and bind tighter than either
composition.  A bare object name stands for its identity, ``I`` is the empty
object list.  Discrete index maps are written ``disc([1,0] : A*B -> B*A)``;
``codisc`` with the same header is the reversed map.
"""
from __future__ import annotations

import re
from dataclasses import dataclass

from .cospan import Kind
from .expr import Const, Disc, Expr, Gen, Seq, Ten
from .finset import FinFn, FinSetObj

__all__ = ["ParseError", "Program", "parse_program", "parse_expr", "format_expr", "format_program"]


class ParseError(ValueError):
    def __init__(self, msg: str, line: int, col: int):
        super().__init__(f"line {line}, column {col}: {msg}")
        self.line = line
        self.col = col


@dataclass
class Program:
    objects: dict[str, FinSetObj]
    gens: dict[str, Gen]
    expr: Expr


_OBJ_DECL = re.compile(r"^\s*([A-Za-z_][\w']*)\s*=\s*(\d+)\s*$")
_GEN_DECL = re.compile(
    r"^\s*([A-Za-z_][\w']*)\s*:\s*([A-Za-z_][\w']*)\s*->\s*([A-Za-z_][\w']*)\s*=\s*\[([\d\s,]*)\]\s*$"
)
_TOKEN = re.compile(r"\s*(?:(?P<name>[A-Za-z_][\w']*)|(?P<int>\d+)|(?P<arrow>->)|(?P<op>[;.*+(),:\[\]]))")

_CONST_NAMES = {k.value: k for k in Kind}


class _Tokens:
    def __init__(self, text: str, line_starts: list[tuple[int, int]]):
        self.toks: list[tuple[str, str, int]] = []
        pos = 0
        while True:
            while pos < len(text) and text[pos].isspace():
                pos += 1
            if pos >= len(text):
                break
            m = _TOKEN.match(text, pos)
            if not m or m.end() == pos:
                raise ParseError(f"unexpected character {text[pos]!r}", *self._where(pos, line_starts))
            kind = m.lastgroup
            self.toks.append((kind, m.group(kind), m.start(kind)))
            pos = m.end()
        self.i = 0
        self.text = text
        self.line_starts = line_starts

    @staticmethod
    def _where(pos: int, line_starts):
        line, start = line_starts[0]
        for ln, st in line_starts:
            if st <= pos:
                line, start = ln, st
        return line, pos - start + 1

    def where(self) -> tuple[int, int]:
        pos = self.toks[self.i][2] if self.i < len(self.toks) else len(self.text)
        return self._where(pos, self.line_starts)

    def error(self, msg: str) -> ParseError:
        return ParseError(msg, *self.where())

    def peek(self) -> tuple[str, str] | None:
        if self.i < len(self.toks):
            k, v, _ = self.toks[self.i]
            return k, v
        return None

    def next(self) -> tuple[str, str]:
        t = self.peek()
        if t is None:
            raise self.error("unexpected end of input")
        self.i += 1
        return t

    def expect(self, value: str) -> None:
        t = self.peek()
        if t is None or t[1] != value:
            raise self.error(f"expected {value!r}, found {t[1] if t else 'end of input'!r}")
        self.i += 1

    def accept(self, value: str) -> bool:
        t = self.peek()
        if t is not None and t[1] == value and t[0] in ("op", "arrow"):
            self.i += 1
            return True
        return False


class _Parser:
    def __init__(self, toks: _Tokens, objects: dict[str, FinSetObj], gens: dict[str, Gen]):
        self.t = toks
        self.objects = objects
        self.gens = gens

    def parse(self) -> Expr:
        e = self.seq()
        if self.t.peek() is not None:
            raise self.t.error(f"unexpected {self.t.peek()[1]!r}")
        return e

    def seq(self) -> Expr:
        e = self.ten()
        while True:
            if self.t.accept(";"):
                e = Seq(e, self.ten())
            elif self.t.accept("."):
                e = Seq(self.ten(), e)
            else:
                return e

    def ten(self) -> Expr:
        e = self.atom()
        while self.t.accept("*") or self.t.accept("+"):
            e = Ten(e, self.atom())
        return e

    def atom(self) -> Expr:
        if self.t.accept("("):
            e = self.seq()
            self.t.expect(")")
            return e
        kind, val = self.t.peek() or ("", "")
        if kind != "name":
            raise self.t.error(f"expected an expression, found {val or 'end of input'!r}")
        self.t.next()
        if val in _CONST_NAMES and self.t.accept("("):
            k = _CONST_NAMES[val]
            xs = self.objlist()
            other: tuple[FinSetObj, ...] = ()
            if k is Kind.SYM:
                self.t.expect(",")
                other = self.objlist()
            self.t.expect(")")
            return Const(k, xs, other)
        if val == "gen" and self.t.accept("("):
            kind, name = self.t.next()
            if name not in self.gens:
                self.t.i -= 1
                raise self.t.error(f"unknown generator {name!r}")
            self.t.expect(")")
            return self.gens[name]
        if val in ("disc", "codisc") and self.t.accept("("):
            phi = self.intlist()
            self.t.expect(":")
            src = self.objlist()
            self.t.expect("->")
            tgt = self.objlist()
            self.t.expect(")")
            return Disc(src, tgt, phi, val == "codisc")
        if val == "I":
            return Const(Kind.ID, ())
        if val in self.objects:
            return Const(Kind.ID, (self.objects[val],))
        self.t.i -= 1
        raise self.t.error(f"unknown name {val!r}")

    def objlist(self) -> tuple[FinSetObj, ...]:
        out = []
        while True:
            kind, name = self.t.next()
            if name == "I":
                pass
            elif kind == "name" and name in self.objects:
                out.append(self.objects[name])
            else:
                self.t.i -= 1
                raise self.t.error(f"unknown object {name!r}")
            if not (self.t.accept("*") or self.t.accept("+")):
                return tuple(out)

    def intlist(self) -> tuple[int, ...]:
        self.t.expect("[")
        out = []
        if self.t.accept("]"):
            return ()
        while True:
            kind, v = self.t.next()
            if kind != "int":
                self.t.i -= 1
                raise self.t.error(f"expected an index, found {v!r}")
            out.append(int(v))
            if self.t.accept("]"):
                return tuple(out)
            self.t.expect(",")


def parse_program(
    text: str,
    objects: dict[str, FinSetObj] | None = None,
    gens: dict[str, Gen] | None = None,
) -> Program:
    """Parse a preamble plus expression; ``objects``/``gens`` seed the
    environment (e.g. from a diagram file)."""
    objects = dict(objects or {})
    gens = dict(gens or {})
    body: list[str] = []
    line_starts: list[tuple[int, int]] = []
    offset = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        m = _OBJ_DECL.match(line)
        if m:
            objects[m.group(1)] = FinSetObj(int(m.group(2)), m.group(1))
            continue
        m = _GEN_DECL.match(line)
        if m:
            name, s, t, table = m.groups()
            for o in (s, t):
                if o not in objects:
                    raise ParseError(f"unknown object {o!r}", lineno, line.index(o) + 1)
            entries = [int(x) for x in table.replace(",", " ").split()]
            try:
                fn = FinFn(entries, objects[t], objects[s])
            except ValueError as exc:
                raise ParseError(str(exc), lineno, 1) from None
            gens[name] = Gen(fn, name)
            continue
        line_starts.append((lineno, offset))
        body.append(line)
        offset += len(line) + 1
    src = "\n".join(body)
    if not src.strip():
        raise ParseError("no expression", len(text.splitlines()) or 1, 1)
    toks = _Tokens(src, line_starts or [(1, 0)])
    return Program(objects, gens, _Parser(toks, objects, gens).parse())


def parse_expr(text: str, objects=None, gens=None) -> Expr:
    return parse_program(text, objects, gens).expr


# -- printing ---------------------------------------------------------------


class _Names:
    """Assigns printable names to objects and generators."""

    def __init__(self):
        self.objects: dict[str, FinSetObj] = {}
        self.by_obj: dict[tuple[str | None, int], str] = {}
        self.gens: dict[str, Gen] = {}
        self.by_gen: dict[Gen, str] = {}

    def obj(self, o: FinSetObj) -> str:
        key = (o.label, o.size)
        if key in self.by_obj:
            return self.by_obj[key]
        base = o.label if o.label and re.fullmatch(r"[A-Za-z_][\w']*", o.label) else f"X{o.size}"
        name, k = base, 1
        while name in self.objects or name in _RESERVED:
            k += 1
            name = f"{base}_{k}"
        self.objects[name] = o
        self.by_obj[key] = name
        return name

    def gen(self, g: Gen) -> str:
        if g in self.by_gen:
            return self.by_gen[g]
        base = g.name if g.name and re.fullmatch(r"[A-Za-z_][\w']*", g.name) else "f"
        name, k = base, 1
        while name in self.gens or name in _RESERVED:
            k += 1
            name = f"{base}_{k}"
        self.gens[name] = g
        self.by_gen[g] = name
        return name


_RESERVED = set(_CONST_NAMES) | {"gen", "disc", "codisc", "I"}


def _objlist(objs, names: _Names) -> str:
    return "*".join(names.obj(o) for o in objs) if objs else "I"


def _fmt(e: Expr, names: _Names, ctx: str) -> str:
    if isinstance(e, Const):
        if e.kind is Kind.SYM:
            return f"sym({_objlist(e.objects, names)}, {_objlist(e.other, names)})"
        return f"{e.kind.value}({_objlist(e.objects, names)})"
    if isinstance(e, Gen):
        return f"gen({names.gen(e)})"
    if isinstance(e, Disc):
        word = "codisc" if e.reverse else "disc"
        phi = ",".join(map(str, e.phi))
        return f"{word}([{phi}] : {_objlist(e.src, names)} -> {_objlist(e.tgt, names)})"
    if isinstance(e, Seq):
        s = f"{_fmt(e.first, names, 'seq')} ; {_fmt(e.second, names, 'seq')}"
        return s if ctx in ("top", "seq") else f"({s})"
    if isinstance(e, Ten):
        s = f"{_fmt(e.left, names, 'ten')} * {_fmt(e.right, names, 'ten')}"
        return s if ctx in ("top", "ten") else f"({s})"
    raise TypeError(e)


def format_expr(e: Expr) -> str:
    return _fmt(e, _Names(), "top")


def format_program(e: Expr) -> str:
    """Self-contained text: declarations for every object and generator used,
    then the expression."""
    names = _Names()
    body = _fmt(e, names, "top")
    gen_lines = []
    for n, g in names.gens.items():
        s, t = names.obj(g.fn.dom), names.obj(g.fn.cod)
        gen_lines.append(f"{n} : {s} -> {t} = [{','.join(map(str, g.fn.table))}]")
    obj_lines = [f"{n} = {o.size}" for n, o in names.objects.items()]
    return "\n".join(obj_lines + gen_lines + [body]) + "\n"
