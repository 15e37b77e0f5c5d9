"""Exponential helicoids and the logarithmic Riemann surface, numerically.

The field ``z -> (e^z, a Im z)`` embeds the plane in R^3 as a helicoid; its
inverse is a single-valued logarithm, and as ``a = 1/n -> 0`` the helicoids
flatten onto the covering ``exp : C -> C minus {0}``.
"""

from .covering import (LiftedPath, SampledPath, circle_path, deck_transform, lift_path,
                       monodromy_check, random_arc_loop, winding_number)
from .errors import (AmbiguousWinding, DegenerateWeights, DimensionMismatch, ExpOverflow,
                     HelicoverError, MonodromyMismatch, NonFiniteValue, NotClosed, NotOnSurface,
                     StepTooLarge, ZeroMagnitude)
from .helicoid import (HelicoidParams, HelicoidPoint, TangentWeights, angle_cos, exp_field,
                       project_to_plane, sample_surface)
from .limits import (ConvergenceReport, StripSpec, injectivity_in_limit, pointwise_gap,
                     strip_convergence, theta_map)
from .logmap import (SheetedLog, SigmaLogPoint, limit_log, log_field, log_general, omega_realize,
                     sheet_index, split_sheet, xi_realize)
from .multi import (MultiConvergenceReport, MultiHelicoidPoint, MultiParams, multi_exp, multi_log,
                    multi_pointwise_gap, multi_strip_convergence, multi_theta)
from .numerics import GridSpec, Tolerance, complex_exp, make_grid, principal_arg

__version__ = "0.1.0"
