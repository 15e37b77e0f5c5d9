"""Path lifting through ``exp : C -> C minus {0}``, deck translations and
winding numbers.

A polyline in the punctured plane is lifted one step at a time: the lift
moves by the principal logarithm of the ratio of consecutive samples. That is
unambiguous as long as no step turns by close to half a revolution, which the
``margin`` on :class:`SampledPath` enforces.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import AmbiguousWinding, MonodromyMismatch, NotClosed, StepTooLarge, ZeroMagnitude
from .logmap import limit_log, sheet_index
from .numerics import TWO_PI, Tolerance, as_complex, principal_arg, resolve

DEFAULT_MARGIN = 0.1
WINDING_RESIDUAL = 1e-9


@dataclass(frozen=True)
class SampledPath:
    """Ordered samples in the punctured plane.

    Construction checks that no sample is at the puncture, that every step
    turns by less than ``pi - margin`` about the origin, and that a closed
    path ends where it starts.
    """

    points: tuple[complex, ...]
    closed: bool = False
    margin: float = DEFAULT_MARGIN
    tol: Tolerance | None = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        pts = tuple(as_complex(p) for p in self.points)
        object.__setattr__(self, "points", pts)
        tol = resolve(self.tol)
        if not pts:
            raise ValueError("a path needs at least one point")
        if not 0 <= self.margin < math.pi:
            raise ValueError(f"margin must lie in [0, pi), got {self.margin!r}")
        for k, p in enumerate(pts):
            if abs(p) <= tol.abs_eps:
                raise ZeroMagnitude(f"path sample {k} = {p!r} is at the puncture")
        limit = math.pi - self.margin
        for k, (a, b) in enumerate(zip(pts, pts[1:])):
            turn = principal_arg(b / a, tol)
            if abs(turn) >= limit:
                raise StepTooLarge(
                    f"step {k}->{k + 1} turns by {turn:.4f} rad; limit is +-{limit:.4f}"
                )
        if self.closed and not tol.close(pts[0], pts[-1]):
            raise NotClosed(f"closed path ends at {pts[-1]!r}, not at its start {pts[0]!r}")

    def __len__(self) -> int:
        return len(self.points)

    def turns(self) -> list[float]:
        """Principal angle of each step ``p[k+1] / p[k]``."""
        tol = resolve(self.tol)
        return [principal_arg(b / a, tol) for a, b in zip(self.points, self.points[1:])]

    def concat(self, other: "SampledPath") -> "SampledPath":
        """Traverse ``self`` then ``other``; the junction sample is shared."""
        tol = resolve(self.tol)
        if not tol.close(self.points[-1], other.points[0]):
            raise ValueError("paths do not meet: end of first != start of second")
        return SampledPath(self.points + other.points[1:], self.closed and other.closed,
                           min(self.margin, other.margin), self.tol)


@dataclass(frozen=True)
class LiftedPath:
    points: tuple[complex, ...]
    start_sheet: int
    end_sheet: int

    @property
    def monodromy(self) -> int:
        return self.end_sheet - self.start_sheet


def lift_path(path: SampledPath, start_sheet: int = 0, tol: Tolerance | None = None) -> LiftedPath:
    """Continuous lift of ``path`` through ``exp``, starting on ``start_sheet``.

    Real parts are taken directly as ``ln|p_k|``; imaginary parts are the
    starting argument plus the running sum of step angles. Keeping that sum
    separate makes lifts from different start sheets differ by exact
    multiples of ``2 pi i`` up to a single rounding.
    """
    tol = resolve(tol)
    z0 = limit_log(path.points[0], start_sheet, tol)
    lifted = [z0]
    acc = 0.0
    for p, turn in zip(path.points[1:], path.turns()):
        acc += turn
        lifted.append(complex(math.log(abs(p)), z0.imag + acc))
    return LiftedPath(tuple(lifted), int(start_sheet), sheet_index(lifted[-1], tol))


def winding_number(path: SampledPath) -> int:
    """Total turning of a closed path about 0, in whole revolutions."""
    if not path.closed:
        raise NotClosed("winding number needs a closed path")
    total = math.fsum(path.turns()) / TWO_PI
    w = round(total)
    if abs(total - w) > WINDING_RESIDUAL:
        raise AmbiguousWinding(f"path turns {total!r} revolutions, not an integer")
    return int(w)


def deck_transform(z, k: int) -> complex:
    """Translate ``z`` by ``2 pi i k``; ``exp`` cannot tell the two apart."""
    z = as_complex(z)
    return complex(z.real, z.imag + TWO_PI * int(k))


def monodromy_check(path: SampledPath, start_sheet: int = 0, tol: Tolerance | None = None) -> int:
    """Sheet shift of the lifted loop, cross-checked against its winding number."""
    if not path.closed:
        raise NotClosed("monodromy needs a closed path")
    shift = lift_path(path, start_sheet, tol).monodromy
    w = winding_number(path)
    if shift != w:
        raise MonodromyMismatch(f"lift moved {shift} sheets but the loop winds {w} times")
    return shift


def circle_path(center: complex = 0j, radius: float = 1.0, samples: int = 64,
                turns: float = 1.0, start_angle: float = 0.0) -> SampledPath:
    """``samples`` equal steps around a circle; negative ``turns`` runs clockwise.

    An integer number of turns gives a closed path whose last sample is the
    first one repeated.
    """
    center = as_complex(center)
    ts = start_angle + TWO_PI * turns * np.arange(samples + 1) / samples
    pts = [center + radius * complex(math.cos(t), math.sin(t)) for t in ts]
    closed = float(turns).is_integer()
    if closed:
        pts[-1] = pts[0]
    return SampledPath(tuple(pts), closed=closed)


def random_arc_loop(rng: np.random.Generator, winding: int, n_arcs: int = 4,
                    max_step: float = 0.2, r_range: tuple[float, float] = (0.3, 3.0)) -> SampledPath:
    """A closed polyline made of origin-centred arcs joined by radial segments.

    Arc spans are random (either direction) but sum to ``2 pi winding``, so the
    analytic winding number is ``winding``.
    """
    theta = rng.uniform(-math.pi, math.pi)
    r = rng.uniform(*r_range)
    start = r * complex(math.cos(theta), math.sin(theta))
    spans = list(rng.uniform(-3 * math.pi, 3 * math.pi, size=n_arcs - 1))
    spans.append(TWO_PI * winding - math.fsum(spans))

    pts = [start]
    for k, span in enumerate(spans):
        steps = max(1, math.ceil(abs(span) / max_step))
        for j in range(1, steps + 1):
            t = theta + span * j / steps
            pts.append(r * complex(math.cos(t), math.sin(t)))
        theta += span
        r_next = abs(start) if k == len(spans) - 1 else rng.uniform(*r_range)
        for j in range(1, 6):
            rr = r + (r_next - r) * j / 5
            pts.append(rr * complex(math.cos(theta), math.sin(theta)))
        r = r_next
    pts[-1] = start
    return SampledPath(tuple(pts), closed=True)
