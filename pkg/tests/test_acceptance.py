"""The eight acceptance criteria.  Each prints one ``ACCEPTANCE`` line; run
this file directly for the summary without pytest."""
import os
import subprocess
import sys
import time
from pathlib import Path

import pytest

from wscc.checks import run_suite

ROOT = Path(__file__).resolve().parent.parent
DATA = ROOT / "data"
LIMIT_SECONDS = 60.0


def _suite(name, **kw):
    def run():
        (res,) = run_suite(name, 0, **kw)
        detail = f"{res.passed} passed, {res.failed} failed"
        if res.counterexample is not None:
            detail += f"; counterexample {res.counterexample}"
        return res.ok, detail

    return run


CLI_RUNS = [
    ["colim", DATA / "parallel_pair.json"],
    ["colim", DATA / "compeqn.json", "--format", "json"],
    ["colim", DATA / "compeqn.json", "--mode", "span"],
    ["colim", DATA / "feedback.json", "--format", "dot"],
    ["limit", DATA / "parallel_pair.json", "--format", "json"],
    ["compile", DATA / "compeqn.json"],
    ["eval", DATA / "coequalizer.wscc", "--diagram", DATA / "parallel_pair.json"],
    ["eval", DATA / "coequalizer.wscc", "--diagram", DATA / "parallel_pair.json", "--mode", "span"],
    ["kleene", DATA / "astarb.json"],
    ["check", "separable", "--seed", "1", "--sizes", "2"],
    ["check", "functoriality", "--seed", "2", "--cases", "20"],
    ["check", "compiler", "--seed", "3", "--cases", "20"],
    ["check", "duality", "--seed", "4", "--sizes", "2"],
    ["check", "nested", "--seed", "5", "--cases", "20"],
    ["check", "feedback", "--seed", "6", "--cases", "50", "--format", "json"],
    ["check", "kleene", "--seed", "7", "--cases", "20"],
]


def _cli_determinism():
    def once(argv, hashseed):
        env = {**os.environ, "PYTHONHASHSEED": str(hashseed)}
        p = subprocess.run([sys.executable, "-m", "wscc.cli", *map(str, argv)], capture_output=True, env=env)
        return p.returncode, p.stdout, p.stderr

    bad = []
    for argv in CLI_RUNS:
        runs = [once(argv, h) for h in (0, 1, 2)]
        if runs[0][0] != 0 or any(r != runs[0] for r in runs[1:]):
            bad.append(" ".join(str(a).replace(str(DATA) + "/", "") for a in argv))
    detail = f"{len(CLI_RUNS) - len(bad)}/{len(CLI_RUNS)} commands identical over 3 runs"
    if bad:
        detail += "; differing: " + ", ".join(bad)
    return not bad, detail


CRITERIA = [
    (1, "separable algebra axioms, both modes, sizes <= 4", _suite("separable", sizes=4)),
    (2, "colim functoriality on random pairs, tensor, constants", _suite("functoriality", cases=200)),
    (3, "compiler soundness and verbatim expressions", _suite("compiler", cases=200)),
    (4, "span evaluation of the coequalizer gives the equalizer", _suite("duality", sizes=4)),
    (5, "nested colimits", _suite("nested", cases=100)),
    (6, "feedback orbits and iterated partial function", _suite("feedback", cases=500)),
    (7, "Kleene pipeline against NFA acceptance", _suite("kleene", cases=100, max_len=8)),
    (8, "CLI determinism", _cli_determinism),
]


def evaluate(n, title, run):
    start = time.perf_counter()
    ok, detail = run()
    elapsed = time.perf_counter() - start
    if elapsed >= LIMIT_SECONDS:
        ok = False
        detail += f"; over the {LIMIT_SECONDS:.0f}s budget"
    line = f"ACCEPTANCE [{'PASS' if ok else 'FAIL'}] {n} {title} ({detail}; {elapsed:.1f}s)"
    return ok, line


@pytest.mark.parametrize("n,title,run", CRITERIA, ids=[f"criterion_{c[0]}" for c in CRITERIA])
def test_criterion(n, title, run, record_property):
    ok, line = evaluate(n, title, run)
    record_property("acceptance", line)
    print(line)
    assert ok, line


if __name__ == "__main__":
    results = [evaluate(*c) for c in CRITERIA]
    for _, line in results:
        print(line)
    sys.exit(0 if all(ok for ok, _ in results) else 1)
