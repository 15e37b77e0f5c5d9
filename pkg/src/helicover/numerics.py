"""Scalar/complex primitives, the tolerance policy and grid generation.

Complex values are plain Python ``complex`` throughout; every public entry
point funnels its arguments through :func:`as_complex`, which rejects NaN
and infinities.
"""

from __future__ import annotations

import math
import os
import sys
from dataclasses import dataclass

import numpy as np

from .errors import ExpOverflow, NonFiniteValue, ZeroMagnitude

TWO_PI = 2.0 * math.pi

# e^u is a normal, finite double exactly on this interval.
EXP_U_MAX = math.log(sys.float_info.max)
EXP_U_MIN = math.log(sys.float_info.min)

EPS_ENV_VAR = "HELICOVER_EPS"


@dataclass(frozen=True)
class Tolerance:
    """Absolute floor and relative scale for float comparisons.

    Comparisons use ``max(abs_eps, rel_eps * scale)``.
    """

    abs_eps: float = 1e-12
    rel_eps: float = 1e-12

    def __post_init__(self):
        for name in ("abs_eps", "rel_eps"):
            val = getattr(self, name)
            if not (math.isfinite(val) and val > 0):
                raise ValueError(f"{name} must be a positive finite number, got {val!r}")

    def bound(self, scale: float = 0.0) -> float:
        return max(self.abs_eps, self.rel_eps * abs(scale))

    def close(self, a: complex, b: complex, scale: float | None = None) -> bool:
        if scale is None:
            scale = max(abs(a), abs(b))
        return abs(a - b) <= self.bound(scale)


def default_tolerance() -> Tolerance:
    """The library default, or a joint override from ``HELICOVER_EPS``."""
    raw = os.environ.get(EPS_ENV_VAR)
    if raw is None or raw.strip() == "":
        return Tolerance()
    try:
        eps = float(raw)
    except ValueError:
        raise ValueError(f"{EPS_ENV_VAR}={raw!r} is not a number") from None
    return Tolerance(eps, eps)


def resolve(tol: Tolerance | None) -> Tolerance:
    return default_tolerance() if tol is None else tol


def as_complex(z) -> complex:
    """Coerce to ``complex`` and refuse non-finite components."""
    try:
        w = complex(z)
    except (TypeError, ValueError):
        raise NonFiniteValue(f"not a complex number: {z!r}") from None
    if not (math.isfinite(w.real) and math.isfinite(w.imag)):
        raise NonFiniteValue(f"non-finite complex value {w!r}")
    return w


def as_real(x, name: str = "value") -> float:
    x = float(x)
    if not math.isfinite(x):
        raise NonFiniteValue(f"{name} must be finite, got {x!r}")
    return x


def principal_arg(w, tol: Tolerance | None = None) -> float:
    """Argument of ``w`` in (-pi, pi], closed at +pi.

    Raises ZeroMagnitude when ``|w| <= abs_eps``.
    """
    w = as_complex(w)
    tol = resolve(tol)
    if abs(w) <= tol.abs_eps:
        raise ZeroMagnitude(f"argument undefined at |w| = {abs(w)!r}")
    theta = math.atan2(w.imag, w.real)
    # atan2 returns -pi for a negative real with imag == -0.0
    if theta <= -math.pi:
        theta = math.pi
    return theta


def complex_exp(z) -> complex:
    """``e^z`` from the real exponential and cos/sin of the imaginary part.

    Refuses real parts outside ``[EXP_U_MIN, EXP_U_MAX]`` instead of
    returning inf or a denormal.
    """
    z = as_complex(z)
    u, v = z.real, z.imag
    if u > EXP_U_MAX or u < EXP_U_MIN:
        raise ExpOverflow(
            f"Re z = {u!r} outside the representable range [{EXP_U_MIN:.6g}, {EXP_U_MAX:.6g}]"
        )
    r = math.exp(u)
    return complex(r * math.cos(v), r * math.sin(v))


def cis(v: float) -> complex:
    return complex(math.cos(v), math.sin(v))


@dataclass(frozen=True)
class GridSpec:
    u_min: float
    u_max: float
    v_min: float
    v_max: float
    nu: int
    nv: int

    def __post_init__(self):
        for name in ("u_min", "u_max", "v_min", "v_max"):
            as_real(getattr(self, name), name)
        if not self.u_min < self.u_max:
            raise ValueError(f"need u_min < u_max, got {self.u_min} >= {self.u_max}")
        if not self.v_min < self.v_max:
            raise ValueError(f"need v_min < v_max, got {self.v_min} >= {self.v_max}")
        for name in ("nu", "nv"):
            n = getattr(self, name)
            if isinstance(n, bool) or int(n) != n or n < 2:
                raise ValueError(f"{name} must be an integer >= 2, got {n!r}")

    @property
    def size(self) -> int:
        return self.nu * self.nv

    def axes(self) -> tuple[np.ndarray, np.ndarray]:
        us = np.linspace(self.u_min, self.u_max, int(self.nu))
        vs = np.linspace(self.v_min, self.v_max, int(self.nv))
        return us, vs


def make_grid(spec: GridSpec) -> list[complex]:
    """Row-major samples ``u_i + i v_j`` (u outer, v inner), corners included."""
    us, vs = spec.axes()
    return [complex(float(u), float(v)) for u in us for v in vs]
