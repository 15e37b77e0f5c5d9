"""Exception hierarchy shared by every module."""

from __future__ import annotations


class HelicoverError(Exception):
    """Base class for all library errors."""


class NonFiniteValue(HelicoverError, ValueError):
    """A NaN or infinity reached an operation."""


class ZeroMagnitude(HelicoverError, ValueError):
    """A planar value sits (numerically) on the puncture at 0.

    ``index`` is the 1-based component number for product-space operations,
    ``None`` otherwise.
    """

    def __init__(self, message: str = "magnitude is zero", index: int | None = None):
        if index is not None:
            message = f"{message} (component {index})"
        super().__init__(message)
        self.index = index


class ExpOverflow(HelicoverError, OverflowError):
    """Real part outside the range where e^u is a normal float."""


class DegenerateWeights(HelicoverError, ValueError):
    """Tangent weights with A = B = 0."""


class NotOnSurface(HelicoverError, ValueError):
    """Point fails the membership residual check for the target surface."""


class StepTooLarge(HelicoverError, ValueError):
    """Consecutive path samples too far apart in angle to lift unambiguously."""


class NotClosed(HelicoverError, ValueError):
    """A closed path was required."""


class AmbiguousWinding(HelicoverError, ArithmeticError):
    """Accumulated angle is not within tolerance of an integer number of turns."""


class MonodromyMismatch(HelicoverError, AssertionError):
    """Lift-based monodromy disagrees with the winding-number oracle."""


class DimensionMismatch(HelicoverError, ValueError):
    """Component counts of product-space arguments differ."""
