"""Exception types shared across the package.

Overflow conditions raise the builtin OverflowError rather than a custom class.
"""


class Eds3Error(Exception):
    """Base class for numerical failures raised by this package."""


class SingularMatrix(Eds3Error):
    """A 3x3 solve hit a pivot below the hard singularity threshold."""


class ParamSingularity(Eds3Error):
    """Scheme parameters could not be produced: a guarded denominator
    vanished or the computed triple failed its condition-system residual
    check, and the fallback solver (where one applies) failed too."""


class SingularImplicitStep(Eds3Error):
    """I - phi*theta*A is singular, so the implicit transfer matrix
    does not exist at this step size."""


class SingularStepMatrix(Eds3Error):
    """A baseline integrator's per-step linear system is singular."""


class ExactnessViolation(Eds3Error):
    """A constructed transfer matrix disagrees with the matrix exponential
    beyond tolerance; indicates misclassification upstream."""


class GridMismatch(Eds3Error):
    """T/h is not a positive integer, so the requested benchmark cell
    has no uniform grid."""


class AmbiguousSpectrumWarning(UserWarning):
    """Eigenvalue clustering was order-dependent (chained near-ties);
    all three values were merged and treated as a triple."""
