"""Reference computations written without the library, used to derive and
freeze expected values."""
from __future__ import annotations

import itertools


def naive_classes(n, pairs):
    """Equivalence closure by repeated relabelling; classes numbered by
    least member."""
    label = list(range(n))
    changed = True
    while changed:
        changed = False
        for x, y in pairs:
            a, b = label[x], label[y]
            if a != b:
                lo, hi = min(a, b), max(a, b)
                label = [lo if v == hi else v for v in label]
                changed = True
    order = {}
    for v in label:
        order.setdefault(v, len(order))
    return [order[v] for v in label]


def all_maps(n, m):
    return list(itertools.product(range(m), repeat=n))


def pushout_classes(f, g, nb, nc):
    return naive_classes(nb + nc, [(x, nb + y) for x, y in zip(f, g)])


def cospan_relation(left_leg, right_leg):
    """Pairs of foot elements sent to the same apex point."""
    return sorted((x, y) for x, p in enumerate(left_leg) for y, q in enumerate(right_leg) if p == q)


def cospan_signature(left, right, apex, leg_l, leg_r):
    """Isomorphism invariant of a cospan: for each apex point, its preimage in
    each foot; plus the number of untouched points."""
    sigs = []
    for p in range(apex):
        sigs.append((tuple(x for x in range(left) if leg_l[x] == p), tuple(y for y in range(right) if leg_r[y] == p)))
    return sorted(s for s in sigs if s != ((), ())), sum(1 for s in sigs if s == ((), ()))


def span_signature(apex, leg_l, leg_r):
    return sorted(zip(leg_l, leg_r))


def paths_language(n, edges, src, tgt, max_len):
    """Words on walks from ``src`` to ``tgt`` of length at most ``max_len``
    in a graph with regex-free labels (letters or None for epsilon),
    by breadth-first search over (state, word) pairs."""
    seen = set()
    frontier = {(src, ())}
    out = set()
    while frontier:
        seen |= frontier
        nxt = set()
        for s, w in frontier:
            if s == tgt:
                out.add(w)
            for a, lab, b in edges:
                if a != s:
                    continue
                w2 = w if lab is None else w + (lab,)
                if len(w2) <= max_len and (b, w2) not in seen:
                    nxt.add((b, w2))
        frontier = nxt
    return out
