"""Regular expressions for random automata, checked against subset
simulation on all words up to a length bound.

    python scripts/kleene_demo.py [count] [seed]
"""
import random
import sys

from wscc.kleene import bounded_equiv, kleene_pipeline
from wscc.random_gen import rand_nfa
from wscc.regex import format_regex


def main(argv):
    count = int(argv[0]) if argv else 5
    rng = random.Random(int(argv[1]) if len(argv) > 1 else 0)
    for k in range(count):
        g = rand_nfa(rng)
        table = kleene_pipeline(g)
        edges = ", ".join(f"{g.states[s]}-{lab or 'eps'}->{g.states[t]}" for s, lab, t in g.edges)
        print(f"automaton {k}: {edges or 'no edges'}")
        for i, s in enumerate(g.initial):
            for j, t in enumerate(g.final):
                r = table[i][j]
                ok = bounded_equiv(r, g.with_feet([s], [t]), 8)
                print(f"  {g.states[s]} -> {g.states[t]}: {format_regex(r)}  [{'ok' if ok else 'MISMATCH'}]")


if __name__ == "__main__":
    main(sys.argv[1:])
