import json
import os
import subprocess
import sys
from pathlib import Path

import pytest

from wscc import cospan as cs
from wscc.cli import main
from wscc.dcospan import colim_functor
from wscc.io import arrow_from_json, automaton_from_json, automaton_to_json, diagram_from_json, diagram_to_json, load_json

DATA = Path(__file__).resolve().parent.parent / "data"


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def write(tmp_path, name, obj):
    p = tmp_path / name
    p.write_text(obj if isinstance(obj, str) else json.dumps(obj))
    return p


def test_colim_parallel_pair(capsys):
    code, out, _ = run(capsys, "colim", DATA / "parallel_pair.json")
    assert code == 0
    assert out.splitlines() == ["[2] -[0,0]-> [1] <-[0,0,0]- [3]", "apex: 1"]


def test_colim_span_mode_is_limit(capsys):
    _, out_span, _ = run(capsys, "colim", DATA / "parallel_pair.json", "--mode", "span")
    _, out_lim, _ = run(capsys, "limit", DATA / "parallel_pair.json")
    assert out_span == out_lim and "apex: 0" in out_span


def test_colim_empty_and_single_edge(capsys, tmp_path):
    empty = write(tmp_path, "e.json", {"vertices": [], "edges": []})
    assert run(capsys, "colim", empty)[1].splitlines()[-1] == "apex: 0"
    one = write(tmp_path, "o.json", {
        "vertices": [{"name": "A", "size": 2}, {"name": "B", "size": 1}],
        "edges": [{"name": "f", "src": "A", "tgt": "B", "map": [0, 0]}],
        "left": ["A"], "right": ["B"],
    })
    assert run(capsys, "colim", one)[1].splitlines()[0] == "[2] -[0,0]-> [1] <-[0]- [1]"


def test_colim_monoidal_file(capsys):
    code, out, _ = run(capsys, "colim", DATA / "feedback.json")
    assert code == 0 and out.splitlines()[0] == "[1] -[0]-> [1] <-[0]- [1]"


def test_compile_parallel_pair(capsys):
    code, out, _ = run(capsys, "compile", DATA / "parallel_pair.json")
    assert code == 0 and out.splitlines()[-1] == "comult(A) ; (gen(f) * gen(g)) ; mult(B)"


@pytest.mark.parametrize("name", ["parallel_pair.json", "compeqn.json"])
def test_compile_eval_round_trip(capsys, tmp_path, name):
    _, prog, _ = run(capsys, "compile", DATA / name)
    p = write(tmp_path, "p.wscc", prog)
    _, a, _ = run(capsys, "eval", p, "--format", "json")
    _, b, _ = run(capsys, "colim", DATA / name, "--format", "json")
    assert cs.iso_eq(arrow_from_json(json.loads(a)), arrow_from_json(json.loads(b)))


def test_eval_separability(capsys, tmp_path):
    one = write(tmp_path, "a.wscc", "A = 2\ncomult(A) ; mult(A)")
    assert run(capsys, "eval", one)[1].strip() == str(cs.identity(2))
    two = write(tmp_path, "b.wscc", "A = 2\nmult(A) ; comult(A)")
    got = arrow_from_json(json.loads(run(capsys, "eval", two, "--format", "json")[1]))
    assert not cs.iso_eq(got, cs.identity(4))
    assert got.apex.size == 2


def test_eval_with_diagram_names(capsys):
    code, out, _ = run(capsys, "eval", DATA / "coequalizer.wscc", "--diagram", DATA / "parallel_pair.json")
    assert code == 0 and out.strip() == "[2] -[0,0]-> [1] <-[0,0,0]- [3]"


def test_kleene(capsys, tmp_path):
    assert run(capsys, "kleene", DATA / "astarb.json")[1].strip() == "((a)*.b)"
    dead = write(tmp_path, "d.json", {
        "alphabet": ["a"], "states": ["p", "q"], "edges": [{"src": "q", "label": "a", "tgt": "p"}],
        "initial": ["p"], "final": ["q"],
    })
    assert run(capsys, "kleene", dead)[1].strip() == "0"


def test_check_separable(capsys):
    code, out, _ = run(capsys, "check", "separable", "--sizes", "3")
    assert code == 0 and out.startswith("separable: pass")


def test_exit_codes(capsys, tmp_path):
    bad_json = write(tmp_path, "bad.json", "{nope")
    code, _, err = run(capsys, "colim", bad_json)
    assert code == 2 and "line 1" in err
    bad_prog = write(tmp_path, "bad.wscc", "A = 1\nmult(A) ; gen(h)")
    code, _, err = run(capsys, "eval", bad_prog)
    assert code == 2 and "line 2, column 15" in err
    ill = write(tmp_path, "ill.wscc", "A = 1\nB = 2\nmult(A) ; B")
    code, _, err = run(capsys, "eval", ill)
    assert code == 3 and "[1]" in err and "[2]" in err
    clash = write(tmp_path, "clash.json", {
        "vertices": [{"name": "A", "size": 1}, {"name": "B", "size": 1}],
        "edges": [{"name": "f", "src": "A", "tgt": "B", "map": [4]}],
    })
    assert run(capsys, "colim", clash)[0] == 3
    assert run(capsys, "check", "nonsense")[0] == 2


def test_property_failure_exit_code(capsys, monkeypatch):
    from wscc import checks

    def broken(seed=0, **_):
        res = checks.SuiteResult("broken")
        res.record(False, lambda: {"case": 0})
        return res

    monkeypatch.setitem(checks.SUITES, "broken", broken)
    code, out, _ = run(capsys, "check", "broken", "--seed", "7")
    assert code == 4 and "--seed 7" in out and '{"case": 0}' in out


def test_json_files_round_trip():
    c = diagram_from_json(load_json(DATA / "compeqn.json"))
    again = diagram_from_json(diagram_to_json(c))
    assert cs.iso_eq(colim_functor(again), colim_functor(c))
    g = automaton_from_json(load_json(DATA / "astarb.json"))
    assert automaton_from_json(automaton_to_json(g)) == g


def test_dot_export(capsys):
    code, out, _ = run(capsys, "colim", DATA / "compeqn.json", "--format", "dot")
    assert code == 0 and out.startswith("digraph") and out.count("->") == 4


COMMANDS = [
    ["colim", DATA / "compeqn.json"],
    ["colim", DATA / "parallel_pair.json", "--mode", "span", "--format", "json"],
    ["limit", DATA / "parallel_pair.json"],
    ["compile", DATA / "compeqn.json"],
    ["eval", DATA / "coequalizer.wscc", "--diagram", DATA / "parallel_pair.json", "--mode", "span"],
    ["kleene", DATA / "astarb.json", "--format", "json"],
    ["check", "kleene", "--seed", "3", "--cases", "10", "--format", "json"],
    ["check", "functoriality", "--seed", "5", "--cases", "10"],
]


def run_process(argv, hashseed):
    env = {**os.environ, "PYTHONHASHSEED": str(hashseed)}
    return subprocess.run([sys.executable, "-m", "wscc.cli", *map(str, argv)], capture_output=True, env=env, check=False)


@pytest.mark.parametrize("argv", COMMANDS, ids=lambda a: " ".join(map(str, a[:2])).replace(str(DATA) + "/", ""))
def test_deterministic_across_processes(argv):
    first = run_process(argv, 1)
    second = run_process(argv, 12345)
    assert first.returncode == 0, first.stderr
    assert first.stdout == second.stdout
