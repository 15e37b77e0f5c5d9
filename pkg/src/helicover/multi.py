"""Products of helicoid fields on C^m.

Everything is componentwise: the m-fold field is the tuple of single fields,
so each operation here delegates to its one-dimensional counterpart and only
adds dimension checks and per-component error reporting. Component numbers in
errors are 1-based.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .errors import DimensionMismatch, ZeroMagnitude
from .helicoid import HelicoidParams, HelicoidPoint, check_level, exp_field
from .limits import ConvergenceReport, StripSpec, pointwise_gap, strip_convergence, theta_map
from .logmap import log_general
from .numerics import Tolerance, as_complex, as_real, resolve


@dataclass(frozen=True)
class MultiParams:
    a: tuple[float, ...]

    def __post_init__(self):
        a = tuple(as_real(x, "a") for x in self.a)
        if not a:
            raise ValueError("need at least one component")
        for k, x in enumerate(a, 1):
            if x <= 0:
                raise ValueError(f"a_{k} must be > 0, got {x!r}")
        object.__setattr__(self, "a", a)

    @classmethod
    def from_level(cls, n: int, m: int) -> "MultiParams":
        return cls((1.0 / check_level(n),) * m)

    def __len__(self) -> int:
        return len(self.a)


@dataclass(frozen=True)
class MultiHelicoidPoint:
    planar: tuple[complex, ...]
    heights: tuple[float, ...]

    def __post_init__(self):
        planar = tuple(as_complex(w) for w in self.planar)
        heights = tuple(as_real(h, "height") for h in self.heights)
        if len(planar) != len(heights):
            raise DimensionMismatch(f"{len(planar)} planar entries but {len(heights)} heights")
        if not planar:
            raise ValueError("need at least one component")
        object.__setattr__(self, "planar", planar)
        object.__setattr__(self, "heights", heights)

    def __len__(self) -> int:
        return len(self.planar)

    def component(self, k: int) -> HelicoidPoint:
        """0-based access to one factor."""
        w = self.planar[k]
        return HelicoidPoint(w.real, w.imag, self.heights[k])

    @classmethod
    def from_components(cls, qs: Sequence[HelicoidPoint]) -> "MultiHelicoidPoint":
        return cls(tuple(complex(q[0], q[1]) for q in qs), tuple(q[2] for q in qs))

    def to_json(self) -> dict:
        return {"planar": [[w.real, w.imag] for w in self.planar], "heights": list(self.heights)}

    @classmethod
    def from_json(cls, obj: dict) -> "MultiHelicoidPoint":
        try:
            planar = tuple(complex(float(re), float(im)) for re, im in obj["planar"])
            heights = tuple(float(h) for h in obj["heights"])
        except (KeyError, TypeError, ValueError) as exc:
            raise ValueError(f"malformed multi-helicoid point: {exc}") from None
        return cls(planar, heights)


def _check_dims(p: MultiParams, m: int) -> None:
    if len(p) != m:
        raise DimensionMismatch(f"{len(p)} parameters for {m} components")


def multi_exp(p: MultiParams, z: Sequence) -> MultiHelicoidPoint:
    _check_dims(p, len(z))
    return MultiHelicoidPoint.from_components(
        [exp_field(HelicoidParams(a), zk) for a, zk in zip(p.a, z)]
    )


def multi_log(p: MultiParams, q: MultiHelicoidPoint, tol: Tolerance | None = None) -> tuple[complex, ...]:
    """Componentwise inverse; a planar zero is reported with its component number."""
    _check_dims(p, len(q))
    tol = resolve(tol)
    out = []
    for k, a in enumerate(p.a):
        try:
            out.append(log_general(HelicoidParams(a), q.component(k), tol))
        except ZeroMagnitude as exc:
            raise ZeroMagnitude("planar part is at the puncture", index=k + 1) from exc
    return tuple(out)


def multi_theta(n: int, m: int, q: MultiHelicoidPoint) -> MultiHelicoidPoint:
    return MultiHelicoidPoint.from_components([theta_map(n, m, q.component(k)) for k in range(len(q))])


def multi_pointwise_gap(n: int, z: Sequence) -> tuple[tuple[float, ...], float]:
    """Per-component gaps and their Euclidean combination."""
    gaps = tuple(pointwise_gap(n, zk) for zk in z)
    return gaps, math.hypot(*gaps)


@dataclass(frozen=True)
class MultiConvergenceReport:
    components: tuple[ConvergenceReport, ...]
    aggregate_observed: float
    aggregate_predicted: float
    abs_eps: float = 1e-12

    @property
    def passed(self) -> bool:
        return (all(c.passed for c in self.components)
                and self.aggregate_observed <= self.aggregate_predicted + self.abs_eps)

    def to_dict(self) -> dict:
        return {
            "components": [c.to_dict() for c in self.components],
            "aggregate_observed": self.aggregate_observed,
            "aggregate_predicted": self.aggregate_predicted,
            "pass": self.passed,
        }


def multi_strip_convergence(n: int, bounds: Sequence[float],
                            windows: Sequence[tuple[float, float]] | None = None,
                            counts: tuple[int, int] = (51, 51),
                            tol: Tolerance | None = None) -> MultiConvergenceReport:
    """Strip diagnostics per factor of the multi-strip ``|Im z_k| < M_k``.

    The factors vary independently, so the sup of the Euclidean gap over the
    product grid is the Euclidean norm of the per-factor sups.
    """
    tol = resolve(tol)
    if windows is None:
        windows = [(-1.0, 1.0)] * len(bounds)
    if len(windows) != len(bounds):
        raise DimensionMismatch(f"{len(bounds)} bounds but {len(windows)} windows")
    nu, nv = counts
    reps = tuple(
        strip_convergence(n, StripSpec(M, u0, u1), nu, nv, tol)
        for M, (u0, u1) in zip(bounds, windows)
    )
    agg_obs = math.hypot(*(r.sup_observed for r in reps))
    agg_pred = math.hypot(*(float(M) for M in bounds)) / check_level(n)
    return MultiConvergenceReport(reps, agg_obs, agg_pred, tol.abs_eps)
