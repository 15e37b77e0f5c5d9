"""Seeded end-to-end check bundle used by ``helicover report``."""

from __future__ import annotations

import math
from typing import Sequence

import numpy as np

from .covering import SampledPath, lift_path, monodromy_check, random_arc_loop, winding_number
from .errors import HelicoverError
from .helicoid import HelicoidParams, exp_field
from .limits import StripSpec, injectivity_in_limit, strip_convergence, theta_map
from .logmap import log_field, omega_realize, xi_realize
from .numerics import Tolerance, resolve


def _random_z(rng: np.random.Generator, count: int, u_max: float = 5.0, v_max: float = 50.0):
    us = rng.uniform(-u_max, u_max, count)
    vs = rng.uniform(-v_max, v_max, count)
    return [complex(float(u), float(v)) for u, v in zip(us, vs)]


def _roundtrip(rng, schedule, tol):
    zs = _random_z(rng, 1000)
    worst = max(abs(log_field(n, exp_field(HelicoidParams.from_level(n), z), tol) - z)
                for n in schedule for z in zs)
    return {"samples": len(zs) * len(schedule), "max_error": worst, "pass": worst <= 1e-10}


def _injectivity(rng, schedule, tol):
    zs = _random_z(rng, 12, 2.0, 10.0)
    rows = injectivity_in_limit(zs, schedule, tol)
    excess = max(abs(r.helicoid_sep - r.plane_sep) - r.bound for r in rows)
    return {"rows": len(rows), "max_excess_over_bound": excess, "pass": all(r.ok for r in rows)}


def _theta(rng):
    zs = _random_z(rng, 20, 3.0, 20.0)
    worst = 0.0
    for z in zs:
        for n in range(1, 7):
            q = exp_field(HelicoidParams.from_level(n), z)
            for m in range(1, 7):
                for k in range(1, 7):
                    lhs = theta_map(m, k, theta_map(n, m, q))
                    rhs = theta_map(n, k, q)
                    worst = max(worst, abs(lhs.h - rhs.h) / max(1.0, abs(rhs.h)))
    return {"max_rel_error": worst, "pass": worst <= 1e-12}


def _realization(rng, tol):
    worst = 0.0
    for a in (1 / 3, 1.0, 7.0):
        for z in _random_z(rng, 200):
            q = exp_field(a, z)
            s = xi_realize(a, q, tol)
            back = omega_realize(a, s, tol)
            again = xi_realize(a, back, tol)
            err_q = max(abs(c1 - c2) / max(1.0, abs(c1)) for c1, c2 in zip(q, back))
            err_s = max(abs(c1 - c2) / max(1.0, abs(c1)) for c1, c2 in zip(s, again))
            worst = max(worst, err_q, err_s)
    return {"max_rel_error": worst, "pass": worst <= 1e-10}


def _loops(rng, count, tol):
    entries = []
    for _ in range(count):
        w = int(rng.integers(-5, 6))
        loop = random_arc_loop(rng, w)
        mono = monodromy_check(loop, 0, tol)
        wind = winding_number(loop)
        entries.append({"expected": w, "monodromy": mono, "winding": wind,
                        "samples": len(loop), "agree": mono == wind == w})
    return entries


def _path_entry(source: str, pts: Sequence[complex], tol: Tolerance) -> dict:
    closed = len(pts) > 1 and tol.close(pts[0], pts[-1])
    path = SampledPath(tuple(pts), closed=closed, tol=tol)
    lifted = lift_path(path, 0, tol)
    entry = {"source": source, "closed": closed, "samples": len(path),
             "end_sheet": lifted.end_sheet}
    if closed:
        mono = lifted.monodromy
        wind = winding_number(path)
        entry.update(monodromy=mono, winding=wind, agree=mono == wind)
    return entry


def build_report(seed: int = 42, n_schedule: Sequence[int] = (1, 10, 100), M: float = math.pi,
                 grid: tuple[int, int] = (101, 101), loops: int = 20,
                 paths: Sequence[tuple[str, Sequence[complex]]] = (),
                 tol: Tolerance | None = None) -> dict:
    """Run every diagnostic from one seeded generator and collect the results.

    ``paths`` holds ``(label, points)`` pairs; a path whose ends coincide is
    treated as a loop and its monodromy is cross-checked.
    """
    tol = resolve(tol)
    rng = np.random.default_rng(seed)
    schedule = list(n_schedule)

    strips = [strip_convergence(n, StripSpec(M, -1.0, 1.0), *grid, tol).to_dict() for n in schedule]
    loop_entries = _loops(rng, loops, tol)
    path_entries = []
    for source, pts in paths:
        try:
            path_entries.append(_path_entry(source, pts, tol))
        except HelicoverError as exc:
            raise type(exc)(f"{source}: {exc}") from exc

    out = {
        "seed": seed,
        "tolerance": {"abs_eps": tol.abs_eps, "rel_eps": tol.rel_eps},
        "n_schedule": schedule,
        "roundtrip": _roundtrip(rng, schedule, tol),
        "injectivity": _injectivity(rng, schedule, tol),
        "strip": {"M": float(M), "reports": strips, "pass": all(s["pass"] for s in strips)},
        "theta": _theta(rng),
        "realization": _realization(rng, tol),
        "monodromy": {
            "loops": loop_entries,
            "paths": path_entries,
            "pass": all(e["agree"] for e in loop_entries)
            and all(e.get("agree", True) for e in path_entries),
        },
    }
    out["pass"] = all(out[k]["pass"] for k in
                      ("roundtrip", "injectivity", "strip", "theta", "realization", "monodromy"))
    return out
