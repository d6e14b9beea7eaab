"""Exact finite-difference schemes for 3-D linear ODE systems x' = A x.

The transfer matrix of either scheme (implicit or explicit) equals the
matrix exponential e^(A h) to machine precision at any step size, so
trajectories land on the true solution at every grid point. Scheme
parameters (psi, phi, theta) are closed-form functions of the
eigenvalues of A and the step size.
"""

from .baselines import MethodId, baseline_transfer
from .bench import (
    BenchRecord,
    ErrorMetric,
    example_records,
    records_csv,
    records_json,
    run_cell,
    run_table,
    steps_for,
    table_records,
)
from .errors import (
    AmbiguousSpectrumWarning,
    Eds3Error,
    ExactnessViolation,
    GridMismatch,
    ParamSingularity,
    SingularImplicitStep,
    SingularMatrix,
    SingularStepMatrix,
)
from .linalg import expm, inf_norm, solve3
from .nsfd import QuasiLinearProblem, nsfd_integrate, nsfd_step, rk4_reference
from .params import SchemeKind, SchemeParams, params_for, residuals
from .problems import (
    LinearProblem,
    example1,
    example2,
    example3,
    example4,
    example5,
    get_problem,
    parse_matrix,
)
from .scheme import (
    Trajectory,
    TransferMatrix,
    build_transfer,
    integrate,
    one_shot,
    step,
    transfer,
)
from .spectrum import (
    ComplexPairPlusReal,
    DistinctReal,
    DistinctRealWithZero,
    DoubleReal,
    Spectrum,
    SpectrumClass,
    TripleReal,
    classify,
    eigenvalues3,
)
from .verify import SweepReport, exactness_sweep

__version__ = "0.1.0"

__all__ = [
    "AmbiguousSpectrumWarning",
    "BenchRecord",
    "ComplexPairPlusReal",
    "DistinctReal",
    "DistinctRealWithZero",
    "DoubleReal",
    "Eds3Error",
    "ErrorMetric",
    "ExactnessViolation",
    "GridMismatch",
    "LinearProblem",
    "MethodId",
    "ParamSingularity",
    "QuasiLinearProblem",
    "SchemeKind",
    "SchemeParams",
    "SingularImplicitStep",
    "SingularMatrix",
    "SingularStepMatrix",
    "Spectrum",
    "SpectrumClass",
    "SweepReport",
    "Trajectory",
    "TransferMatrix",
    "TripleReal",
    "baseline_transfer",
    "build_transfer",
    "classify",
    "eigenvalues3",
    "example1",
    "example2",
    "example3",
    "example4",
    "example5",
    "example_records",
    "exactness_sweep",
    "expm",
    "get_problem",
    "inf_norm",
    "integrate",
    "nsfd_integrate",
    "nsfd_step",
    "one_shot",
    "params_for",
    "parse_matrix",
    "records_csv",
    "records_json",
    "residuals",
    "rk4_reference",
    "run_cell",
    "run_table",
    "solve3",
    "step",
    "steps_for",
    "table_records",
    "transfer",
]
