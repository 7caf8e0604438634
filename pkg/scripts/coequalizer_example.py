"""Coequalizer of a parallel pair, three ways: directly by union-find, as a
colimit of the diagram cospan, and by evaluating the structural expression.
The same expression in span mode gives the equalizer.

    python scripts/coequalizer_example.py [f-table] [g-table] [size of B]
"""
import sys

from wscc import (
    DiagramCospan, FinFn, FinSetObj, LabeledDiagram, coequalizer, colim_functor, compile_diagram,
    equalizer, evaluate, format_program, iso_eq,
)
from wscc.diagram import Edge


def main(argv):
    f = [int(x) for x in argv[0].split(",")] if argv else [0, 1, 2]
    g = [int(x) for x in argv[1].split(",")] if len(argv) > 1 else [1, 2, 2]
    nb = int(argv[2]) if len(argv) > 2 else 4
    A, B = FinSetObj(len(f), "A"), FinSetObj(nb, "B")
    ff, gg = FinFn(f, B, A), FinFn(g, B, A)

    q = coequalizer(ff, gg)
    print(f"f = {f}, g = {g} into [{nb}]")
    print(f"coequalizer map {list(q.table)} onto [{q.cod.size}]")

    d = LabeledDiagram((A, B), (Edge(0, 1, ff, "f"), Edge(0, 1, gg, "g")))
    c = DiagramCospan(d, [0], [1])
    prog = compile_diagram(c)
    print("expression:", format_program(prog).strip().splitlines()[-1])
    direct, via_expr = colim_functor(c), evaluate(prog, "cospan")
    print("colimit cospan:", direct)
    print("expression agrees:", iso_eq(direct, via_expr))

    e = equalizer(ff, gg)
    lim = evaluate(prog, "span")
    print(f"equalizer inclusion {list(e.table)}; span apex size {lim.apex.size}")


if __name__ == "__main__":
    main(sys.argv[1:])
