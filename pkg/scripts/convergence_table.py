#!/usr/bin/env python3
"""Print observed vs predicted sup gap on |Im z| <= M for a range of levels n.

    python scripts/convergence_table.py --M 3.14159 --levels 1 2 4 8 16 32 64 128
"""

import argparse
import math

from helicover.limits import StripSpec, strip_convergence


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--M", type=float, default=math.pi)
    ap.add_argument("--levels", type=int, nargs="+", default=[1, 2, 4, 8, 16, 32, 64, 128, 256])
    ap.add_argument("--grid", type=int, default=101)
    args = ap.parse_args()

    strip = StripSpec(args.M, -2.0, 2.0)
    print(f"{'n':>6} {'sup observed':>22} {'M/n':>22} {'ratio to prev':>14}")
    prev = None
    for n in args.levels:
        rep = strip_convergence(n, strip, args.grid, args.grid)
        ratio = "" if prev is None else f"{prev / rep.sup_observed:14.10f}"
        print(f"{n:6d} {rep.sup_observed:22.17g} {rep.sup_predicted:22.17g} {ratio}")
        prev = rep.sup_observed


if __name__ == "__main__":
    main()
