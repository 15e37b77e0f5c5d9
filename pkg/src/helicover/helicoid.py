"""The exponential helicoid field ``z -> (e^z, a Im z)`` and its sampling."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

from .errors import DegenerateWeights
from .numerics import GridSpec, Tolerance, as_complex, as_real, complex_exp, make_grid, resolve


@dataclass(frozen=True)
class HelicoidParams:
    """Pitch ``a > 0``: one full turn of the helicoid climbs ``2 pi a``."""

    a: float

    def __post_init__(self):
        a = as_real(self.a, "a")
        if a <= 0:
            raise ValueError(f"pitch a must be > 0, got {a!r}")

    @classmethod
    def from_level(cls, n: int) -> "HelicoidParams":
        """The ``a = 1/n`` member of the convergent sequence."""
        return cls(1.0 / check_level(n))


def check_level(n) -> int:
    if isinstance(n, bool) or int(n) != n or n < 1:
        raise ValueError(f"level n must be a positive integer, got {n!r}")
    return int(n)


class HelicoidPoint(NamedTuple):
    """A point of C x R; ``x + iy`` is the planar part and ``h`` the height."""

    x: float
    y: float
    h: float

    @property
    def planar(self) -> complex:
        return complex(self.x, self.y)


class TangentWeights(NamedTuple):
    A: float
    B: float


def _params(p) -> HelicoidParams:
    return p if isinstance(p, HelicoidParams) else HelicoidParams(p)


def exp_field(p: HelicoidParams | float, z) -> HelicoidPoint:
    """Evaluate ``(e^u cos v, e^u sin v, a v)`` at ``z = u + iv``."""
    p = _params(p)
    z = as_complex(z)
    w = complex_exp(z)
    return HelicoidPoint(w.real, w.imag, p.a * z.imag)


def project_to_plane(q: HelicoidPoint) -> complex:
    """Drop the height; composed with :func:`exp_field` this is ``e^z``."""
    return as_complex(complex(q[0], q[1]))


def angle_cos(p: HelicoidParams | float, w: TangentWeights | tuple, z,
              tol: Tolerance | None = None) -> float:
    """Cosine of the angle in R^3 between the field value at ``z`` and ``(A, B, 0)``.

    The cosine is evaluated by the closed formula
    ``e^u (A cos v + B sin v) / (sqrt(e^2u + a^2 v^2) sqrt(A^2 + B^2))``.
    Rounding overshoot past +-1 of at most ``abs_eps`` is clamped away.
    """
    p = _params(p)
    A, B = (as_real(c, "weight") for c in w)
    if abs(A) + abs(B) == 0:
        raise DegenerateWeights("tangent weights A and B are both zero")
    z = as_complex(z)
    tol = resolve(tol)
    u, v = z.real, z.imag
    r = complex_exp(complex(u, 0.0)).real
    num = r * (A * math.cos(v) + B * math.sin(v))
    den = math.hypot(r, p.a * v) * math.hypot(A, B)
    c = num / den
    if 1.0 < abs(c) <= 1.0 + tol.abs_eps:
        c = math.copysign(1.0, c)
    return c


def sample_surface(p: HelicoidParams | float, spec: GridSpec) -> list[HelicoidPoint]:
    """:func:`exp_field` over :func:`make_grid`, same row-major order."""
    p = _params(p)
    return [exp_field(p, z) for z in make_grid(spec)]
