#!/usr/bin/env python3
"""Write OBJ patches of the a = 1/n helicoids to watch them flatten.

Each file covers the same (u, v) window, so the meshes can be loaded side by
side in any OBJ viewer.
"""

import argparse
import math
from pathlib import Path

from helicover.helicoid import HelicoidParams
from helicover.mesh import helicoid_mesh, write_obj
from helicover.numerics import GridSpec


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("outdir", type=Path)
    ap.add_argument("--levels", type=int, nargs="+", default=[1, 2, 4, 8])
    ap.add_argument("--turns", type=float, default=2.0)
    args = ap.parse_args()

    args.outdir.mkdir(parents=True, exist_ok=True)
    spec = GridSpec(-1.0, 1.0, -math.pi * args.turns, math.pi * args.turns, 24, int(96 * args.turns))
    for n in args.levels:
        verts, faces = helicoid_mesh(HelicoidParams.from_level(n), spec)
        out = args.outdir / f"helicoid_n{n:03d}.obj"
        write_obj(out, verts, faces)
        print(f"{out}: {len(verts)} vertices, {len(faces)} faces")


if __name__ == "__main__":
    main()
