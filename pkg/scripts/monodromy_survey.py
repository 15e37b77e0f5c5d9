#!/usr/bin/env python3
"""Lift many random loops and tabulate sheet shift against winding number."""

import argparse
from collections import Counter

import numpy as np

from helicover.covering import lift_path, random_arc_loop, winding_number


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--loops", type=int, default=500)
    ap.add_argument("--max-winding", type=int, default=5)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    rng = np.random.default_rng(args.seed)
    agree = Counter()
    disagree = []
    for _ in range(args.loops):
        w = int(rng.integers(-args.max_winding, args.max_winding + 1))
        loop = random_arc_loop(rng, w, n_arcs=int(rng.integers(2, 8)))
        shift = lift_path(loop, int(rng.integers(-3, 4))).monodromy
        wind = winding_number(loop)
        if shift == wind == w:
            agree[w] += 1
        else:
            disagree.append((w, shift, wind))

    for w in sorted(agree):
        print(f"winding {w:+d}: {agree[w]} loops, all agree")
    print(f"disagreements: {len(disagree)}")
    for row in disagree[:10]:
        print("  expected %+d  lift %+d  winding %+d" % row)


if __name__ == "__main__":
    main()
