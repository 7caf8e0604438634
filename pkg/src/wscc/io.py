"""JSON and DOT formats for diagrams, monoidal diagrams, automata and arrows."""
from __future__ import annotations

import json
from typing import Any

from . import cospan as cs
from .cospan import Cospan, Span
from .dcospan import DiagramCospan
from .diagram import Edge, LabeledDiagram
from .finset import BoundaryError, FinFn, FinSetObj
from .kleene import EPS_LABEL, LabelledGraph
from .monoidal import Arc, MonoidalDiagram, MonoidalDiagramCospan

__all__ = [
    "FormatError",
    "diagram_from_json",
    "diagram_to_json",
    "monoidal_from_json",
    "automaton_from_json",
    "automaton_to_json",
    "arrow_to_json",
    "arrow_from_json",
    "to_dot",
    "load_json",
]


class FormatError(ValueError):
    """Malformed input file (a parse error for the command line)."""


def load_json(path: str) -> Any:
    try:
        with open(path) as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path}: line {exc.lineno}, column {exc.colno}: {exc.msg}") from None


def _field(obj: dict, key: str, where: str):
    if not isinstance(obj, dict) or key not in obj:
        raise FormatError(f"{where}: missing field {key!r}")
    return obj[key]


def _vertices(data: dict) -> tuple[list[FinSetObj], dict[str, int]]:
    objs: list[FinSetObj] = []
    index: dict[str, int] = {}
    for k, v in enumerate(_field(data, "vertices", "diagram")):
        name = _field(v, "name", f"vertex {k}")
        size = _field(v, "size", f"vertex {name!r}")
        if name in index:
            raise FormatError(f"duplicate vertex name {name!r}")
        if not isinstance(size, int) or size < 0:
            raise FormatError(f"vertex {name!r}: size must be a non-negative integer")
        index[name] = len(objs)
        objs.append(FinSetObj(size, name))
    return objs, index


def _ref(index: dict[str, int], name: str, where: str) -> int:
    if name not in index:
        raise FormatError(f"{where}: unknown vertex {name!r}")
    return index[name]


def _feet(data: dict, index: dict[str, int]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    left = tuple(_ref(index, n, "left foot") for n in data.get("left", []))
    right = tuple(_ref(index, n, "right foot") for n in data.get("right", []))
    return left, right


def diagram_from_json(data: dict) -> DiagramCospan:
    objs, index = _vertices(data)
    edges = []
    seen = set()
    for k, e in enumerate(data.get("edges", [])):
        name = e.get("name", f"e{k}")
        if name in seen:
            raise FormatError(f"duplicate edge name {name!r}")
        seen.add(name)
        s = _ref(index, _field(e, "src", f"edge {name!r}"), f"edge {name!r}")
        t = _ref(index, _field(e, "tgt", f"edge {name!r}"), f"edge {name!r}")
        try:
            fn = FinFn(_field(e, "map", f"edge {name!r}"), objs[t], objs[s])
        except (ValueError, TypeError) as exc:
            raise BoundaryError(f"edge {name!r}: {exc}") from None
        edges.append(Edge(s, t, fn, name))
    left, right = _feet(data, index)
    return DiagramCospan(LabeledDiagram(tuple(objs), tuple(edges)), left, right)


def diagram_to_json(c: DiagramCospan) -> dict:
    names = c.center.names
    return {
        "vertices": [{"name": n, "size": o.size} for n, o in zip(names, c.center.objects)],
        "edges": [
            {"name": e.name or f"e{k}", "src": names[e.src], "tgt": names[e.tgt], "map": list(e.fn.table)}
            for k, e in enumerate(c.center.edges)
        ],
        "left": [names[v] for v in c.left],
        "right": [names[v] for v in c.right],
    }


def _word(index: dict[str, int], w, where: str) -> tuple[int, ...]:
    if isinstance(w, str):
        w = [w]
    return tuple(_ref(index, n, where) for n in w)


def monoidal_from_json(data: dict) -> MonoidalDiagramCospan:
    """Edges carry word lists: ``"src": ["A", "C"], "tgt": ["B", "C"]``."""
    objs, index = _vertices(data)
    arcs = []
    for k, e in enumerate(data.get("edges", [])):
        name = e.get("name", f"e{k}")
        d0 = _word(index, _field(e, "src", f"edge {name!r}"), f"edge {name!r}")
        d1 = _word(index, _field(e, "tgt", f"edge {name!r}"), f"edge {name!r}")
        cod = sum(objs[v].size for v in d1)
        dom = sum(objs[v].size for v in d0)
        try:
            fn = FinFn(_field(e, "map", f"edge {name!r}"), cod, dom)
        except (ValueError, TypeError) as exc:
            raise BoundaryError(f"edge {name!r}: {exc}") from None
        arcs.append(Arc(d0, d1, fn, name))
    left, right = _feet(data, index)
    return MonoidalDiagramCospan(MonoidalDiagram(tuple(objs), tuple(arcs)), left, right)


def automaton_from_json(data: dict) -> LabelledGraph:
    alphabet = [str(a) for a in _field(data, "alphabet", "automaton")]
    if EPS_LABEL in alphabet:
        raise FormatError(f"{EPS_LABEL!r} is reserved for epsilon moves")
    states = [str(s) for s in _field(data, "states", "automaton")]
    index = {s: i for i, s in enumerate(states)}
    if len(index) != len(states):
        raise FormatError("duplicate state names")
    edges = []
    for k, e in enumerate(data.get("edges", [])):
        s = _ref(index, _field(e, "src", f"edge {k}"), f"edge {k}")
        t = _ref(index, _field(e, "tgt", f"edge {k}"), f"edge {k}")
        lab = _field(e, "label", f"edge {k}")
        if lab != EPS_LABEL and lab not in alphabet:
            raise FormatError(f"edge {k}: label {lab!r} is not in the alphabet")
        edges.append((s, None if lab == EPS_LABEL else lab, t))
    initial = [_ref(index, s, "initial") for s in data.get("initial", [])]
    final = [_ref(index, s, "final") for s in data.get("final", [])]
    return LabelledGraph(alphabet, states, edges, initial, final)


def automaton_to_json(g: LabelledGraph) -> dict:
    return {
        "alphabet": list(g.alphabet),
        "states": list(g.states),
        "edges": [
            {"src": g.states[s], "label": EPS_LABEL if lab is None else lab, "tgt": g.states[t]}
            for s, lab, t in g.edges
        ],
        "initial": [g.states[v] for v in g.initial],
        "final": [g.states[v] for v in g.final],
    }


def arrow_to_json(a: cs.Arrow) -> dict:
    return {
        "mode": a.mode,
        "left": a.left.size,
        "right": a.right.size,
        "apex": a.apex.size,
        "legL": list(a.legL.table),
        "legR": list(a.legR.table),
    }


def arrow_from_json(data: dict) -> cs.Arrow:
    mode = _field(data, "mode", "arrow")
    left, right, apex = (_field(data, k, "arrow") for k in ("left", "right", "apex"))
    if mode == "cospan":
        return Cospan(
            FinSetObj(left), FinSetObj(right), FinSetObj(apex),
            FinFn(data["legL"], apex, left), FinFn(data["legR"], apex, right),
        )
    if mode == "span":
        return Span(
            FinSetObj(left), FinSetObj(right), FinSetObj(apex),
            FinFn(data["legL"], left, apex), FinFn(data["legR"], right, apex),
        )
    raise FormatError(f"unknown mode {mode!r}")


def _dot_id(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(c: DiagramCospan | MonoidalDiagramCospan) -> str:
    """Graphviz rendering of the centre; foot vertices are drawn doubled."""
    lines = ["digraph center {", "  rankdir=LR;"]
    if isinstance(c, DiagramCospan):
        names = c.center.names
        objs = c.center.objects
    else:
        objs = c.center.objects
        names = [o.label or f"v{i}" for i, o in enumerate(objs)]
    feet = set(c.left) | set(c.right)
    for i, (n, o) in enumerate(zip(names, objs)):
        shape = "doublecircle" if i in feet else "circle"
        lines.append(f"  v{i} [label={_dot_id(f'{n} [{o.size}]')}, shape={shape}];")
    if isinstance(c, DiagramCospan):
        for e in c.center.edges:
            label = f"{e.name} {list(e.fn.table)}"
            lines.append(f"  v{e.src} -> v{e.tgt} [label={_dot_id(label)}];")
    else:
        for k, a in enumerate(c.center.arcs):
            lines.append(f"  a{k} [label={_dot_id(a.name or f'a{k}')}, shape=box];")
            lines.extend(f"  v{v} -> a{k};" for v in a.d0)
            lines.extend(f"  a{k} -> v{v};" for v in a.d1)
    lines.append("}")
    return "\n".join(lines) + "\n"
