"""Named property suites.  Each compares the library against an independent
oracle on seeded or exhaustive instances and reports pass/fail counts with
the first counterexample as JSON-ready data."""
from __future__ import annotations

import functools
import itertools
import random
from dataclasses import dataclass, field
from typing import Callable, Iterator

from . import cospan as cs
from .cospan import Kind
from .dcospan import (
    DiagramCospan,
    DiagramOfDiagrams,
    colim_functor,
    dcompose,
    dconstant,
    dtensor,
    nested_colim_check,
)
from .diagram import LabeledDiagram
from .expr import compile_diagram, evaluate, eval_diagram, reassociate
from .finset import FinFn, FinSetObj
from .io import automaton_to_json, diagram_to_json
from .kleene import kleene_pipeline, nfa_accepts, nfa_language
from .monoidal import feedback_cospan, trace_partial_fn
from .random_gen import (
    rand_composable_pair,
    rand_dcospan,
    rand_diagram_of_diagrams,
    rand_feedback,
    rand_nfa,
)
from .regex import bounded_language, format_regex, matches, uses_only_kleene_ops
from .syntax import parse_program

__all__ = ["SuiteResult", "SUITES", "run_suite", "COEQ_TEXT", "COMPEQN_TEXT"]


@dataclass
class SuiteResult:
    name: str
    passed: int = 0
    failed: int = 0
    counterexample: dict | None = None
    notes: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.failed == 0 and self.passed > 0

    def record(self, ok: bool, case: Callable[[], dict]) -> None:
        if ok:
            self.passed += 1
        else:
            self.failed += 1
            if self.counterexample is None:
                self.counterexample = case()

    def to_json(self) -> dict:
        return {
            "suite": self.name,
            "passed": self.passed,
            "failed": self.failed,
            "counterexample": self.counterexample,
        }


Case = tuple[bool, Callable[[], dict]]


def _run(name: str, cases: Iterator[Case]) -> SuiteResult:
    res = SuiteResult(name)
    for ok, case in cases:
        res.record(ok, case)
    return res


def _arrow_text(a) -> str:
    return cs.format_arrow(a)


# -- separable algebra axioms -----------------------------------------------


@functools.lru_cache(maxsize=None)
def _const(kind: Kind, n: int, mode: str):
    return cs.constant(kind, n, mode)


def _axioms(n: int, mode: str) -> Iterator[tuple[str, object, object]]:
    c = lambda k: _const(k, n, mode)  # noqa: E731
    one = c(Kind.ID)
    t, seq = cs.tensor, cs.compose_all
    mult, comult, unit, counit = c(Kind.MULT), c(Kind.COMULT), c(Kind.UNIT), c(Kind.COUNIT)
    sym = cs.symmetry(n, n, mode)
    yield "mult associative", seq([t(mult, one), mult]), seq([t(one, mult), mult])
    yield "mult left unit", seq([t(unit, one), mult]), one
    yield "mult right unit", seq([t(one, unit), mult]), one
    yield "mult commutative", seq([sym, mult]), mult
    yield "comult coassociative", seq([comult, t(comult, one)]), seq([comult, t(one, comult)])
    yield "comult left counit", seq([comult, t(counit, one)]), one
    yield "comult right counit", seq([comult, t(one, counit)]), one
    yield "comult cocommutative", seq([comult, sym]), comult
    frob_l = seq([t(comult, one), t(one, mult)])
    frob_r = seq([t(one, comult), t(mult, one)])
    middle = seq([mult, comult])
    yield "frobenius left", frob_l, middle
    yield "frobenius right", frob_r, middle
    yield "separable", seq([comult, mult]), one
    yield "snake left", seq([t(one, c(Kind.ETA)), t(c(Kind.EPS), one)]), one
    yield "snake right", seq([t(c(Kind.ETA), one), t(one, c(Kind.EPS))]), one
    yield "eta", c(Kind.ETA), seq([unit, comult])
    yield "eps", c(Kind.EPS), seq([mult, counit])
    yield "sym involutive", seq([sym, sym]), t(one, one)


def separable(seed: int = 0, sizes: int = 4, **_) -> SuiteResult:
    def cases():
        for mode in cs.MODES:
            for n in range(sizes + 1):
                for name, lhs, rhs in _axioms(n, mode):
                    yield cs.iso_eq(lhs, rhs), lambda: {
                        "axiom": name,
                        "mode": mode,
                        "size": n,
                        "lhs": _arrow_text(lhs),
                        "rhs": _arrow_text(rhs),
                    }

    return _run("separable", cases())


# -- functoriality of colim -------------------------------------------------


def _const_instances(rng: random.Random, sizes: int):
    for kind in Kind:
        objs = [FinSetObj(rng.randint(0, sizes)) for _ in range(rng.randint(0, 3))]
        if kind is Kind.SYM:
            other = [FinSetObj(rng.randint(0, sizes)) for _ in range(rng.randint(0, 3))]
            d = dconstant(kind, [objs, other])
            expect = cs.symmetry(sum(o.size for o in objs), sum(o.size for o in other))
        else:
            d = dconstant(kind, objs)
            expect = cs.constant(kind, sum(o.size for o in objs))
        yield kind, d, expect


def functoriality(seed: int = 0, cases: int = 200, sizes: int = 4, **_) -> SuiteResult:
    rng = random.Random(seed)

    def gen():
        for i in range(cases):
            a, b = rand_composable_pair(rng, 4, sizes)
            lhs = colim_functor(dcompose(a, b))
            rhs = cs.compose(colim_functor(a), colim_functor(b))
            yield cs.iso_eq(lhs, rhs), lambda: {
                "law": "compose",
                "case": i,
                "a": diagram_to_json(a),
                "b": diagram_to_json(b),
                "colim_of_composite": _arrow_text(lhs),
                "composite_of_colims": _arrow_text(rhs),
            }
            c, d = rand_dcospan(rng, 4, sizes), rand_dcospan(rng, 4, sizes)
            lhs_t = colim_functor(dtensor(c, d))
            rhs_t = cs.tensor(colim_functor(c), colim_functor(d))
            yield cs.iso_eq(lhs_t, rhs_t), lambda: {
                "law": "tensor",
                "case": i,
                "a": diagram_to_json(c),
                "b": diagram_to_json(d),
                "colim_of_tensor": _arrow_text(lhs_t),
                "tensor_of_colims": _arrow_text(rhs_t),
            }
            for kind, dc, expect in _const_instances(rng, sizes):
                got = colim_functor(dc)
                yield cs.iso_eq(got, expect), lambda: {
                    "law": "constant",
                    "kind": kind.value,
                    "diagram": diagram_to_json(dc),
                    "got": _arrow_text(got),
                    "expected": _arrow_text(expect),
                }

    return _run("functoriality", gen())


# -- compiler soundness -----------------------------------------------------

COEQ_TEXT = "mult(B) . (gen(f)+gen(g)) . comult(A)"
COMPEQN_TEXT = (
    "(eps(B)+C) . (gen(h)+B+gen(k)) . (comult(B)+B) . comult(B) . "
    "(mult(B)+eps(A)) . (gen(f)+B+gen(g)+A) . (A+eta(B)+A) . comult(A)"
)


def _rand_table(rng: random.Random, dom: int, cod: int) -> list[int]:
    return [rng.randrange(cod) for _ in range(dom)]


def coeq_instance(rng: random.Random, max_size: int = 3) -> tuple[str, DiagramCospan]:
    a = rng.randint(0, max_size)
    b = rng.randint(1 if a else 0, max_size)
    f, g = _rand_table(rng, a, b), _rand_table(rng, a, b)
    pre = f"A = {a}\nB = {b}\nf : A -> B = {f}\ng : A -> B = {g}\n"
    d = LabeledDiagram.build({"A": a, "B": b}, [("f", "A", "B", f), ("g", "A", "B", g)])
    return pre + COEQ_TEXT, DiagramCospan(d, (0,), (1,))


def compeqn_instance(rng: random.Random, max_size: int = 3) -> tuple[str, DiagramCospan]:
    """``f: A -> B, g: B -> A, h: B -> B, k: B -> C`` with feet ``{A}`` and ``{C}``."""
    while True:
        a, b, c = (rng.randint(0, max_size) for _ in range(3))
        if (a == 0 or b > 0) and (b == 0 or (a > 0 and c > 0)):
            break
    f, g, h, k = (
        _rand_table(rng, a, b),
        _rand_table(rng, b, a),
        _rand_table(rng, b, b),
        _rand_table(rng, b, c),
    )
    pre = (
        f"A = {a}\nB = {b}\nC = {c}\n"
        f"f : A -> B = {f}\ng : B -> A = {g}\nh : B -> B = {h}\nk : B -> C = {k}\n"
    )
    d = LabeledDiagram.build(
        {"A": a, "B": b, "C": c},
        [("f", "A", "B", f), ("g", "B", "A", g), ("h", "B", "B", h), ("k", "B", "C", k)],
    )
    return pre + COMPEQN_TEXT, DiagramCospan(d, (0,), (2,))


def compiler(seed: int = 0, cases: int = 200, sizes: int = 4, **_) -> SuiteResult:
    rng = random.Random(seed)
    feet_kinds = ("any", "closed", "boundary")

    def gen():
        for i in range(cases):
            c = rand_dcospan(rng, 4, sizes, feet=feet_kinds[i % 3])
            e = compile_diagram(c)
            direct = colim_functor(c)
            got = evaluate(e, "cospan")
            yield cs.iso_eq(got, direct), lambda: {
                "check": "compile",
                "case": i,
                "diagram": diagram_to_json(c),
                "eval": _arrow_text(got),
                "colim": _arrow_text(direct),
            }
            # the compiled expression also rebuilds the diagram itself
            again = colim_functor(eval_diagram(e))
            yield cs.iso_eq(again, direct), lambda: {
                "check": "diagram value",
                "case": i,
                "diagram": diagram_to_json(c),
                "colim_of_value": _arrow_text(again),
                "colim": _arrow_text(direct),
            }
            shuffled = evaluate(reassociate(e, rng), "cospan")
            yield cs.iso_eq(shuffled, direct), lambda: {
                "check": "reassociate",
                "case": i,
                "diagram": diagram_to_json(c),
                "eval": _arrow_text(shuffled),
                "colim": _arrow_text(direct),
            }
        for which, make in (("coequalizer", coeq_instance), ("compeqn", compeqn_instance)):
            for i in range(max(1, cases // 4)):
                text, d = make(rng)
                got = evaluate(parse_program(text).expr, "cospan")
                direct = colim_functor(d)
                yield cs.iso_eq(got, direct), lambda: {
                    "check": which,
                    "program": text,
                    "eval": _arrow_text(got),
                    "colim": _arrow_text(direct),
                }

    return _run("compiler", gen())


# -- limits via span evaluation ---------------------------------------------


def equalizer_scan(f: list[int], g: list[int]) -> list[int]:
    return [x for x in range(len(f)) if f[x] == g[x]]


def duality(seed: int = 0, sizes: int = 4, **_) -> SuiteResult:
    """Exhaustive over all ``f, g: A -> B`` with ``|A|, |B| <= sizes``.

    The composite is assembled from cached constants, since only the middle
    factor depends on ``f`` and ``g``.
    """

    def gen():
        for a in range(sizes + 1):
            for b in range(sizes + 1):
                if a and not b:
                    continue
                first = _const(Kind.COMULT, a, "span")
                last = _const(Kind.MULT, b, "span")
                maps = list(itertools.product(range(b), repeat=a))
                lifts = [cs.lift(FinFn(t, b, a), "forward", "span") for t in maps]
                for (f, lf), (g, lg) in itertools.product(zip(maps, lifts), repeat=2):
                    got = cs.compose(cs.compose(first, cs.tensor(lf, lg)), last)
                    eq = equalizer_scan(list(f), list(g))
                    ok = list(got.legL.table) == eq and list(got.legR.table) == [f[x] for x in eq]
                    yield ok, lambda: {
                        "A": a,
                        "B": b,
                        "f": list(f),
                        "g": list(g),
                        "span": _arrow_text(got),
                        "equalizer": eq,
                    }

    return _run("duality", gen())


# -- nested colimits --------------------------------------------------------


def nested(seed: int = 0, cases: int = 100, sizes: int = 3, **_) -> SuiteResult:
    rng = random.Random(seed)

    def gen():
        for a, b, c in itertools.product(range(sizes + 1), repeat=3):
            dd = DiagramOfDiagrams(
                (LabeledDiagram((FinSetObj(a, "A"),)), LabeledDiagram((FinSetObj(b, "B"), FinSetObj(c, "C"))))
            )
            r = nested_colim_check(dd)
            ok = r.ok and r.flattened.size == r.iterated.size == a + b + c
            yield ok, lambda: {"case": "triple sum", "sizes": [a, b, c], "flattened": r.flattened.size, "iterated": r.iterated.size}
        for i in range(cases):
            dd = rand_diagram_of_diagrams(rng, 8)
            r = nested_colim_check(dd)
            yield r.ok, lambda: {
                "case": i,
                "diagrams": [diagram_to_json(DiagramCospan(d)) for d in dd.diagrams],
                "morphisms": [
                    {"src": m.src, "tgt": m.tgt, "vertices": list(m.vertex_map), "edges": list(m.edge_map)}
                    for m in dd.morphisms
                ],
                "flattened": r.flattened.size,
                "iterated": r.iterated.size,
            }

    return _run("nested", gen())


# -- feedback ---------------------------------------------------------------


def orbit_count(a: int, b: int, c: int, f: list[int]) -> tuple[int, list[int]]:
    """Classes of ``A+B+C`` under ``x ~ f(x)``, by repeated relabelling."""
    n = a + b + c
    label = list(range(n))
    pairs = [(x if x < a else x + b, a + y) for x, y in enumerate(f)]
    changed = True
    while changed:
        changed = False
        for x, y in pairs:
            lo = min(label[x], label[y])
            if label[x] != lo or label[y] != lo:
                old = {label[x], label[y]}
                label = [lo if l in old else l for l in label]
                changed = True
    return len(set(label)), label


def feedback(seed: int = 0, cases: int = 500, sizes: int = 3, **_) -> SuiteResult:
    rng = random.Random(seed)

    def instances():
        # every size triple first, then random maps
        for a, b, c in itertools.product(range(sizes + 1), repeat=3):
            if a + c and not b + c:
                continue
            yield a, b, c, FinFn([rng.randrange(b + c) for _ in range(a + c)], b + c, a + c)
        for _ in range(cases):
            yield rand_feedback(rng, sizes)

    def gen():
        for a, b, c, f in instances():
            cos = feedback_cospan(a, b, c, f)
            count, _ = orbit_count(a, b, c, list(f.table))
            yield cos.apex.size == count, lambda: {
                "check": "orbits",
                "A": a, "B": b, "C": c,
                "f": list(f.table),
                "cospan": _arrow_text(cos),
                "orbits": count,
            }
            tr = trace_partial_fn(a, b, c, f)
            graph = sorted((x, y) for x, y in enumerate(tr) if y is not None)
            related = sorted(
                (x, y) for x in range(a) for y in range(b) if cos.legL.table[x] == cos.legR.table[y]
            )
            yield related == graph, lambda: {
                "check": "trace",
                "A": a, "B": b, "C": c,
                "f": list(f.table),
                "pullback": related,
                "trace": graph,
            }

    return _run("feedback", gen())


# -- Kleene -----------------------------------------------------------------


def kleene(seed: int = 0, cases: int = 100, max_len: int = 8, **_) -> SuiteResult:
    rng = random.Random(seed)

    def gen():
        for i in range(cases):
            g = rand_nfa(rng)
            table = kleene_pipeline(g)
            for p, s in enumerate(g.initial):
                for q, t in enumerate(g.final):
                    r = table[p][q]
                    single = g.with_feet([s], [t])
                    lang = bounded_language(r, max_len)
                    ok = lang == nfa_language(single, max_len) and uses_only_kleene_ops(r)
                    yield ok, lambda: {
                        "case": i,
                        "automaton": automaton_to_json(single),
                        "regex": format_regex(r),
                    }
            # spot-check the set semantics against direct membership
            word = tuple(rng.choice(g.alphabet) for _ in range(rng.randint(0, 5)))
            r = table[0][0]
            single = g.with_feet([g.initial[0]], [g.final[0]])
            yield matches(r, word) == nfa_accepts(single, word), lambda: {
                "case": i,
                "word": "".join(word),
                "automaton": automaton_to_json(single),
                "regex": format_regex(r),
            }

    return _run("kleene", gen())


SUITES: dict[str, Callable[..., SuiteResult]] = {
    "separable": separable,
    "functoriality": functoriality,
    "compiler": compiler,
    "duality": duality,
    "nested": nested,
    "feedback": feedback,
    "kleene": kleene,
}


def run_suite(name: str, seed: int = 0, **kw) -> list[SuiteResult]:
    """Run one suite, or every suite for ``all``.  Keyword bounds that are
    ``None`` fall back to each suite's default."""
    kw = {k: v for k, v in kw.items() if v is not None}
    if name == "all":
        return [fn(seed=seed, **kw) for fn in SUITES.values()]
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {sorted(SUITES) + ['all']}")
    return [SUITES[name](seed=seed, **kw)]
