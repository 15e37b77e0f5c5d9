"""Command-line front end.

Exit codes: 0 success, 1 usage or bad input, 2 numeric domain error
(overflow, puncture, off-surface point), 3 file I/O, 4 report checks failed.
"""

from __future__ import annotations

import argparse
import math
import sys

from . import __version__
from .covering import SampledPath, lift_path, winding_number
from .errors import (AmbiguousWinding, ExpOverflow, HelicoverError, MonodromyMismatch,
                     NotOnSurface, ZeroMagnitude)
from .formats import dumps, parse_complex, read_path
from .helicoid import HelicoidParams, HelicoidPoint, exp_field
from .limits import StripSpec, strip_convergence
from .logmap import log_field, log_general, sheet_index
from .mesh import helicoid_mesh, write_obj
from .multi import MultiParams, multi_exp
from .numerics import GridSpec, Tolerance, default_tolerance
from .report import build_report

EXIT_OK, EXIT_USAGE, EXIT_DOMAIN, EXIT_IO, EXIT_CHECKS = 0, 1, 2, 3, 4
_DOMAIN_ERRORS = (ExpOverflow, ZeroMagnitude, NotOnSurface, MonodromyMismatch, AmbiguousWinding)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _complex_arg(text: str) -> complex:
    try:
        return parse_complex(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _positive(text: str) -> float:
    x = float(text)
    if not (math.isfinite(x) and x > 0):
        raise argparse.ArgumentTypeError(f"expected a positive number, got {text!r}")
    return x


def _level(text: str) -> int:
    n = int(text)
    if n < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    return n


def _emit(obj, out=None, indent=None) -> None:
    text = dumps(obj, indent) + "\n"
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def cmd_eval(args, tol):
    zs, aa = args.z, args.a
    if len(zs) == 1 and len(aa) == 1:
        q = exp_field(aa[0], zs[0])
        return {"x": q.x, "y": q.y, "h": q.h}
    if len(aa) == 1:
        aa = aa * len(zs)
    if len(aa) != len(zs):
        raise UsageError(f"got {len(aa)} --a values for {len(zs)} --z values")
    return multi_exp(MultiParams(tuple(aa)), zs).to_json()


def cmd_invert(args, tol):
    q = HelicoidPoint(args.x, args.y, args.h)
    if (args.a is None) == (args.n is None):
        raise UsageError("give exactly one of --a or --n")
    z = log_field(args.n, q, tol) if args.n is not None else log_general(args.a, q, tol)
    return {"re": z.real, "im": z.imag, "sheet": sheet_index(z, tol)}


def cmd_converge(args, tol):
    strip = StripSpec(args.M, args.u_min, args.u_max)
    return strip_convergence(args.n, strip, args.nu, args.nv, tol).to_dict()


def cmd_lift(args, tol):
    pts = read_path(args.path)
    if args.closed and not tol.close(pts[0], pts[-1]):
        pts.append(pts[0])
    path = SampledPath(tuple(pts), closed=args.closed, tol=tol)
    lifted = lift_path(path, args.start_sheet, tol)
    out = {
        "points": [[z.real, z.imag] for z in lifted.points],
        "start_sheet": lifted.start_sheet,
        "end_sheet": lifted.end_sheet,
        "closed": path.closed,
    }
    if path.closed:
        wind = winding_number(path)
        out.update(monodromy=lifted.monodromy, winding=wind, agree=lifted.monodromy == wind)
    return out


def cmd_mesh(args, tol):
    spec = GridSpec(*args.grid[:4], int(args.grid[4]), int(args.grid[5]))
    verts, faces = helicoid_mesh(HelicoidParams(args.a), spec)
    write_obj(args.out, verts, faces)
    return {"out": args.out, "vertices": len(verts), "faces": len(faces)}


def cmd_report(args, tol):
    paths = [(p, read_path(p)) for p in args.paths]
    return build_report(seed=args.seed, n_schedule=args.n_schedule, M=args.M,
                        grid=(args.nu, args.nv), loops=args.loops, paths=paths, tol=tol)


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="helicover", description=__doc__.splitlines()[0])
    ap.add_argument("--version", action="version", version=__version__)
    ap.add_argument("--eps", type=_positive, default=None,
                    help="absolute and relative tolerance (overrides HELICOVER_EPS)")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("eval", help="evaluate the helicoid field (repeat --z for a product point)")
    p.add_argument("--a", type=_positive, action="append", required=True)
    p.add_argument("--z", type=_complex_arg, action="append", required=True)
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("invert", help="recover z from a helicoid point")
    p.add_argument("--a", type=_positive)
    p.add_argument("--n", type=_level)
    p.add_argument("--x", type=float, required=True)
    p.add_argument("--y", type=float, required=True)
    p.add_argument("--h", type=float, required=True)
    p.set_defaults(func=cmd_invert)

    p = sub.add_parser("converge", help="sup gap on a strip versus the M/n bound")
    p.add_argument("--n", type=_level, required=True)
    p.add_argument("--M", type=_positive, required=True)
    p.add_argument("--u-min", type=float, default=-1.0)
    p.add_argument("--u-max", type=float, default=1.0)
    p.add_argument("--nu", type=int, default=201)
    p.add_argument("--nv", type=int, default=201)
    p.set_defaults(func=cmd_converge)

    p = sub.add_parser("lift", help="lift a path file (CSV re,im or JSON pairs) through exp")
    p.add_argument("path")
    p.add_argument("--start-sheet", type=int, default=0)
    p.add_argument("--closed", action="store_true",
                   help="treat as a loop; the first point is appended if the file does not repeat it")
    p.set_defaults(func=cmd_lift)

    p = sub.add_parser("mesh", help="write a helicoid patch as Wavefront OBJ")
    p.add_argument("--a", type=_positive, default=1.0)
    p.add_argument("--grid", type=float, nargs=6, metavar=("U_MIN", "U_MAX", "V_MIN", "V_MAX", "NU", "NV"),
                   default=[-1.0, 1.0, -2 * math.pi, 2 * math.pi, 32, 256])
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_mesh)

    p = sub.add_parser("report", help="seeded bundle of all diagnostics")
    p.add_argument("paths", nargs="*", help="extra path files to lift")
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--n-schedule", type=_level, nargs="+", default=[1, 10, 100])
    p.add_argument("--M", type=_positive, default=math.pi)
    p.add_argument("--nu", type=int, default=101)
    p.add_argument("--nv", type=int, default=101)
    p.add_argument("--loops", type=int, default=20)
    p.add_argument("--out")
    p.set_defaults(func=cmd_report)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return exc.code
    try:
        tol = Tolerance(args.eps, args.eps) if args.eps is not None else default_tolerance()
        result = args.func(args, tol)
        if args.command == "report":
            _emit(result, args.out, indent=2)
            return EXIT_OK if result["pass"] else EXIT_CHECKS
        _emit(result)
    except _DOMAIN_ERRORS as exc:
        print(f"helicover: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except OSError as exc:
        print(f"helicover: {exc}", file=sys.stderr)
        return EXIT_IO
    except (HelicoverError, UsageError, ValueError) as exc:
        print(f"helicover: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
