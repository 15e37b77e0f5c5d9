"""Inverses of the helicoid field, sheet bookkeeping, and the maps between the
R^3 helicoid and the graph surface ``{(u, v, e^u cos v, e^u sin v)}`` in R^4.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

from .errors import NotOnSurface, ZeroMagnitude
from .helicoid import HelicoidParams, HelicoidPoint, _params, check_level
from .numerics import TWO_PI, Tolerance, as_complex, as_real, complex_exp, principal_arg, resolve


@dataclass(frozen=True)
class SheetedLog:
    """``principal + 2 pi i sheet``, with ``principal.imag`` in (-pi, pi]."""

    principal: complex
    sheet: int

    @property
    def value(self) -> complex:
        return complex(self.principal.real, self.principal.imag + TWO_PI * self.sheet)


class SigmaLogPoint(NamedTuple):
    u: float
    v: float
    x: float
    y: float


def _planar_modulus(q, tol: Tolerance) -> float:
    x, y = as_real(q[0], "x"), as_real(q[1], "y")
    r = math.hypot(x, y)
    if r <= tol.abs_eps:
        raise ZeroMagnitude(f"planar part ({x!r}, {y!r}) is at the puncture")
    return r


def log_field(n: int, q: HelicoidPoint, tol: Tolerance | None = None) -> complex:
    """Inverse of the level-``n`` field: ``ln|K| + i n h`` for ``q = (K, h)``.

    The height carries ``Im z`` itself, so there is no 2 pi ambiguity.
    """
    n = check_level(n)
    r = _planar_modulus(q, resolve(tol))
    return complex(math.log(r), n * as_real(q[2], "h"))


def log_general(p: HelicoidParams | float, q: HelicoidPoint, tol: Tolerance | None = None) -> complex:
    """Inverse of :func:`~helicover.helicoid.exp_field` for any pitch: ``ln|K| + i h/a``."""
    p = _params(p)
    r = _planar_modulus(q, resolve(tol))
    return complex(math.log(r), as_real(q[2], "h") / p.a)


def split_sheet(z, tol: Tolerance | None = None) -> SheetedLog:
    """Decompose ``z`` as a principal logarithm plus a deck translate.

    Imaginary parts that land within tolerance of the cut at -pi (after
    removing whole turns) are put on the closed +pi side, so rounding noise in
    ``Im z`` cannot flip the sheet of a point sitting on the negative real axis.
    """
    z = as_complex(z)
    tol = resolve(tol)
    v = z.imag
    r = math.remainder(v, TWO_PI)
    k = round((v - r) / TWO_PI)
    if r <= -math.pi + tol.bound(v):
        r += TWO_PI
        k -= 1
    return SheetedLog(complex(z.real, r), int(k))


def sheet_index(z, tol: Tolerance | None = None) -> int:
    """Integer ``k`` with ``Im z - Arg(e^z) = 2 pi k``; zero iff ``Im z`` in (-pi, pi]."""
    return split_sheet(z, tol).sheet


def limit_log(K, sheet: int, tol: Tolerance | None = None) -> complex:
    """``ln|K| + i (Arg K + 2 pi sheet)``, the logarithm on a chosen sheet."""
    K = as_complex(K)
    tol = resolve(tol)
    if isinstance(sheet, bool) or int(sheet) != sheet:
        raise ValueError(f"sheet must be an integer, got {sheet!r}")
    if abs(K) <= tol.abs_eps:
        raise ZeroMagnitude(f"log undefined at K = {K!r}")
    return complex(math.log(abs(K)), principal_arg(K, tol) + TWO_PI * int(sheet))


def _membership_residual(u: float, v: float, x: float, y: float, tol: Tolerance) -> tuple[float, float]:
    r = complex_exp(complex(u, 0.0)).real
    res = max(abs(r * math.cos(v) - x), abs(r * math.sin(v) - y))
    return res, tol.bound(r)


def xi_realize(p: HelicoidParams | float, q: HelicoidPoint, tol: Tolerance | None = None) -> SigmaLogPoint:
    """Send a helicoid point ``(e^u cos v, e^u sin v, a v)`` to ``(u, v, e^u cos v, e^u sin v)``.

    ``u`` comes from the planar norm and ``v`` from the height; the planar part
    must then agree with ``e^u (cos v, sin v)`` or the point is not on this
    helicoid.
    """
    p = _params(p)
    tol = resolve(tol)
    x, y, h = (as_real(c) for c in q)
    u = math.log(_planar_modulus(q, tol))
    v = h / p.a
    res, bound = _membership_residual(u, v, x, y, tol)
    if res > bound:
        raise NotOnSurface(
            f"({x!r}, {y!r}, {h!r}) is not on the a={p.a!r} helicoid: residual {res:.3g} > {bound:.3g}"
        )
    return SigmaLogPoint(u, v, x, y)


def omega_realize(p: HelicoidParams | float, s: SigmaLogPoint, tol: Tolerance | None = None) -> HelicoidPoint:
    """Inverse of :func:`xi_realize`: ``(u, v, x, y) -> (x, y, a v)``."""
    p = _params(p)
    tol = resolve(tol)
    u, v, x, y = (as_real(c) for c in s)
    res, bound = _membership_residual(u, v, x, y, tol)
    if res > bound:
        raise NotOnSurface(f"{tuple(s)!r} is not on the log surface: residual {res:.3g} > {bound:.3g}")
    return HelicoidPoint(x, y, p.a * v)
