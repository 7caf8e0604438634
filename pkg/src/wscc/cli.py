"""Command line: ``wscc colim|limit|compile|eval|kleene|check``.

Exit codes: 0 ok, 2 parse error, 3 type error, 4 property failure.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from . import cospan as cs
from .checks import run_suite
from .dcospan import DiagramCospan, colim_functor, lim_functor
from .expr import ExprTypeError, Gen, compile_diagram, evaluate
from .finset import BoundaryError, FinFn
from .io import (
    FormatError,
    arrow_to_json,
    automaton_from_json,
    diagram_from_json,
    load_json,
    monoidal_from_json,
    to_dot,
)
from .kleene import kleene_pipeline
from .monoidal import mon_colim_functor
from .regex import format_regex
from .syntax import ParseError, format_program, parse_program

EXIT_OK, EXIT_PARSE, EXIT_TYPE, EXIT_PROPERTY = 0, 2, 3, 4


@dataclass
class RunConfig:
    command: str
    inputs: list[str]
    mode: str = "cospan"
    fmt: str = "text"
    seed: int = 0
    max_len: int = 8
    sizes: int | None = None
    cases: int | None = None


def _emit_arrow(a: cs.Arrow, fmt: str, extra: dict | None = None) -> str:
    if fmt == "json":
        return json.dumps({**arrow_to_json(a), **(extra or {})}, sort_keys=True)
    lines = [cs.format_arrow(a)]
    lines += [f"{k}: {v}" for k, v in (extra or {}).items()]
    return "\n".join(lines)


def _is_monoidal(data: dict) -> bool:
    return any(isinstance(e.get("src"), list) or isinstance(e.get("tgt"), list) for e in data.get("edges", []))


def _load_diagram(path: str) -> DiagramCospan:
    data = load_json(path)
    if _is_monoidal(data):
        raise FormatError(f"{path}: word-valued edges need the colim command")
    return diagram_from_json(data)


def cmd_colim(cfg: RunConfig) -> str:
    data = load_json(cfg.inputs[0])
    if _is_monoidal(data):
        c = monoidal_from_json(data)
        if cfg.fmt == "dot":
            return to_dot(c)
        a = mon_colim_functor(c)
        return _emit_arrow(a, cfg.fmt, {"apex": a.apex.size})
    c = diagram_from_json(data)
    if cfg.fmt == "dot":
        return to_dot(c)
    if cfg.mode == "span":
        # the limit, computed by evaluating the compiled expression in spans
        a = evaluate(compile_diagram(c), "span")
    else:
        a = colim_functor(c)
    return _emit_arrow(a, cfg.fmt, {"apex": a.apex.size})


def cmd_limit(cfg: RunConfig) -> str:
    c = _load_diagram(cfg.inputs[0])
    if cfg.fmt == "dot":
        return to_dot(c)
    a = lim_functor(c)
    return _emit_arrow(a, cfg.fmt, {"apex": a.apex.size})


def cmd_compile(cfg: RunConfig) -> str:
    c = _load_diagram(cfg.inputs[0])
    text = format_program(compile_diagram(c))
    if cfg.fmt == "json":
        return json.dumps({"program": text}, sort_keys=True)
    return text.rstrip("\n")


def _environment(path: str | None):
    """Objects and generators named by a diagram file."""
    if path is None:
        return {}, {}
    c = _load_diagram(path)
    objects = {n: o for n, o in zip(c.center.names, c.center.objects)}
    gens = {}
    for e in c.center.edges:
        src, tgt = c.center.objects[e.src], c.center.objects[e.tgt]
        gens[e.name] = Gen(FinFn(e.fn.table, tgt, src), e.name)
    return objects, gens


def cmd_eval(cfg: RunConfig, diagram: str | None = None) -> str:
    path = cfg.inputs[0]
    text = sys.stdin.read() if path == "-" else open(path).read()
    objects, gens = _environment(diagram)
    prog = parse_program(text, objects, gens)
    a = evaluate(prog.expr, cfg.mode)
    return _emit_arrow(a, cfg.fmt)


def cmd_kleene(cfg: RunConfig) -> str:
    g = automaton_from_json(load_json(cfg.inputs[0]))
    table = kleene_pipeline(g)
    rows = [
        (g.states[s], g.states[t], format_regex(table[i][j]))
        for i, s in enumerate(g.initial)
        for j, t in enumerate(g.final)
    ]
    if cfg.fmt == "json":
        return json.dumps([{"initial": s, "final": t, "regex": r} for s, t, r in rows], sort_keys=True)
    if len(rows) == 1:
        return rows[0][2]
    return "\n".join(f"{s} -> {t}: {r}" for s, t, r in rows)


def cmd_check(cfg: RunConfig) -> tuple[str, bool]:
    results = run_suite(cfg.inputs[0], cfg.seed, sizes=cfg.sizes, cases=cfg.cases, max_len=cfg.max_len)
    ok = all(r.ok for r in results)
    if cfg.fmt == "json":
        return json.dumps([{**r.to_json(), "seed": cfg.seed} for r in results], sort_keys=True), ok
    lines = []
    for r in results:
        status = "pass" if r.ok else "FAIL"
        lines.append(f"{r.name}: {status} ({r.passed} passed, {r.failed} failed)")
        if r.counterexample is not None:
            lines.append(f"  reproduce with --seed {cfg.seed}")
            lines.append("  " + json.dumps(r.counterexample, sort_keys=True))
    return "\n".join(lines), ok


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="wscc", description="Compositional limits and colimits of finite diagrams.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, mode=False):
        sp.add_argument("--format", dest="fmt", choices=("text", "json", "dot"), default="text")
        if mode:
            sp.add_argument("--mode", choices=cs.MODES, default="cospan")

    sp = sub.add_parser("colim", help="colimit of a diagram cospan (limit with --mode span)")
    sp.add_argument("input")
    common(sp, mode=True)
    sp = sub.add_parser("limit", help="limit of a diagram cospan")
    sp.add_argument("input")
    common(sp)
    sp = sub.add_parser("compile", help="print an expression for a diagram cospan")
    sp.add_argument("input")
    common(sp)
    sp = sub.add_parser("eval", help="evaluate an expression file ('-' for stdin)")
    sp.add_argument("input")
    sp.add_argument("--diagram", help="diagram file whose vertex and edge names seed the preamble")
    common(sp, mode=True)
    sp = sub.add_parser("kleene", help="regular expression for each initial/final pair")
    sp.add_argument("input")
    common(sp)
    sp = sub.add_parser("check", help="run a property suite")
    sp.add_argument("suite", help="separable, functoriality, compiler, duality, nested, feedback, kleene or all")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--sizes", type=int, help="largest object size")
    sp.add_argument("--cases", type=int, help="number of random cases")
    sp.add_argument("--max-len", type=int, default=8, help="word length bound for language checks")
    common(sp)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    for name in ("sizes", "cases", "max_len"):
        v = getattr(args, name, None)
        if v is not None and v <= 0 and not (name == "sizes" and v == 0):
            print(f"error: --{name.replace('_', '-')} must be positive", file=sys.stderr)
            return EXIT_PARSE
    cfg = RunConfig(
        command=args.command,
        inputs=[getattr(args, "input", None) or getattr(args, "suite", None)],
        mode=getattr(args, "mode", "cospan"),
        fmt=args.fmt,
        seed=getattr(args, "seed", 0),
        max_len=getattr(args, "max_len", 8),
        sizes=getattr(args, "sizes", None),
        cases=getattr(args, "cases", None),
    )
    try:
        if cfg.command == "check":
            out, ok = cmd_check(cfg)
            print(out)
            return EXIT_OK if ok else EXIT_PROPERTY
        handlers = {
            "colim": cmd_colim,
            "limit": cmd_limit,
            "compile": cmd_compile,
            "eval": lambda c: cmd_eval(c, args.diagram),
            "kleene": cmd_kleene,
        }
        print(handlers[cfg.command](cfg))
        return EXIT_OK
    except KeyError as exc:
        print(f"error: {exc.args[0]}", file=sys.stderr)
        return EXIT_PARSE
    except (ParseError, FormatError) as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (ExprTypeError, BoundaryError) as exc:
        print(f"type error: {exc}", file=sys.stderr)
        return EXIT_TYPE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
