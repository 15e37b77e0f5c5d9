"""Transition maps between the ``a = 1/n`` helicoids and the rate at which they
flatten onto the complex exponential.

The level-``n`` field differs from ``(e^z, 0)`` only in its height
``Im z / n``, so the pointwise gap is exactly ``|Im z| / n`` and the sup over a
strip ``|Im z| <= M`` is ``M / n``. The diagnostics here measure those gaps
numerically so they can be compared against the closed forms.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass
from itertools import combinations

from .helicoid import HelicoidParams, HelicoidPoint, check_level, exp_field
from .numerics import GridSpec, Tolerance, as_complex, as_real, complex_exp, make_grid, resolve


def theta_map(n: int, m: int, q: HelicoidPoint) -> HelicoidPoint:
    """Move a point of the level-``n`` helicoid to level ``m``.

    The planar part is kept and the height rescaled by ``n/m``; ``n == m``
    returns ``q`` unchanged.
    """
    n, m = check_level(n), check_level(m)
    x, y, h = (as_real(c) for c in q)
    if n == m:
        return HelicoidPoint(x, y, h)
    return HelicoidPoint(x, y, h * n / m)


def pointwise_gap(n: int, z) -> float:
    """Euclidean distance in R^3 between the level-``n`` field and ``(e^z, 0)``."""
    z = as_complex(z)
    q = exp_field(HelicoidParams.from_level(n), z)
    w = complex_exp(z)
    return math.hypot(q.x - w.real, q.y - w.imag, q.h)


@dataclass(frozen=True)
class StripSpec:
    """Sampling window ``[u_min, u_max] x [-M, M]`` for the strip ``|Im z| < M``."""

    M: float
    u_min: float = -1.0
    u_max: float = 1.0

    def __post_init__(self):
        M = as_real(self.M, "M")
        if M <= 0:
            raise ValueError(f"strip half-width M must be > 0, got {M!r}")
        if not as_real(self.u_min) < as_real(self.u_max):
            raise ValueError(f"need u_min < u_max, got {self.u_min} >= {self.u_max}")

    def grid(self, nu: int, nv: int) -> GridSpec:
        return GridSpec(self.u_min, self.u_max, -self.M, self.M, nu, nv)


@dataclass(frozen=True)
class ConvergenceReport:
    n: int
    M: float
    sup_observed: float
    sup_predicted: float
    samples: int
    abs_eps: float = 1e-12

    @property
    def passed(self) -> bool:
        return self.sup_observed <= self.sup_predicted + self.abs_eps

    def to_dict(self) -> dict:
        d = asdict(self)
        del d["abs_eps"]
        d["pass"] = self.passed
        return d


def strip_convergence(n: int, strip: StripSpec, nu: int, nv: int,
                      tol: Tolerance | None = None) -> ConvergenceReport:
    """Sup of :func:`pointwise_gap` over a grid on the closed strip window.

    The grid includes the edges ``Im z = +-M``, where the sup ``M/n`` of the
    open strip is attained in the closure.
    """
    n = check_level(n)
    tol = resolve(tol)
    pts = make_grid(strip.grid(nu, nv))
    sup = max(pointwise_gap(n, z) for z in pts)
    return ConvergenceReport(n=n, M=float(strip.M), sup_observed=sup,
                             sup_predicted=strip.M / n, samples=len(pts),
                             abs_eps=tol.abs_eps)


@dataclass(frozen=True)
class SeparationRow:
    """One ``(n, z, w)`` entry of :func:`injectivity_in_limit`."""

    n: int
    i: int
    j: int
    helicoid_sep: float
    plane_sep: float
    bound: float
    ok: bool


def injectivity_in_limit(zs, n_schedule, tol: Tolerance | None = None) -> list[SeparationRow]:
    """Compare separations on the helicoids against separations of ``e^z``.

    For every level and every pair, ``| ||Exp_n z - Exp_n w|| - |e^z - e^w| |``
    must not exceed ``(|Im z| + |Im w|)/n``, which is what the triangle
    inequality through ``(e^z, 0)`` and ``(e^w, 0)`` gives.
    """
    tol = resolve(tol)
    zs = [as_complex(z) for z in zs]
    if len(set(zs)) != len(zs):
        raise ValueError("sample points must be pairwise distinct")
    sched = [check_level(n) for n in n_schedule]
    if any(b <= a for a, b in zip(sched, sched[1:])):
        raise ValueError(f"n schedule must be strictly increasing, got {sched}")

    planar = [complex_exp(z) for z in zs]
    rows = []
    for n in sched:
        p = HelicoidParams.from_level(n)
        pts = [exp_field(p, z) for z in zs]
        for i, j in combinations(range(len(zs)), 2):
            a, b = pts[i], pts[j]
            hsep = math.dist(a, b)
            psep = abs(planar[i] - planar[j])
            bound = (abs(zs[i].imag) + abs(zs[j].imag)) / n
            ok = abs(hsep - psep) <= bound + tol.bound(max(hsep, psep))
            rows.append(SeparationRow(n, i, j, hsep, psep, bound, ok))
    return rows
