"""Distance measures on quantum states and sharp continuity bounds for
quantum relative entropy, with extremal witness constructions and a
randomized verification harness."""

from ._backend import BACKEND
from .bounds import (
    BoundReport,
    SMinCurve,
    approx_convergence_rate,
    bound_report,
    fannes_bound,
    lower_bound_pinsker,
    lower_bound_sharp,
    s_of_x,
    smin_curve,
    upper_bound_brat,
    upper_bound_log,
    upper_bound_minus_log_beta,
    upper_bound_quadratic,
    upper_bound_sharp_d2,
    upper_bound_sharp_dgt2,
)
from .entropy import (
    bures_distance,
    fidelity,
    relative_entropy,
    relative_entropy_gradient,
    von_neumann_entropy,
)
from .harness import SuiteConfig, SuiteReport, replay, run_suite
from .linalg import eig_hermitian, matrix_log, quadratic_log_form
from .norms import (
    OPERATOR,
    TRACE,
    NormKind,
    ky_fan,
    norm,
    rescaled_distance,
    schatten,
    trace_distance_full,
    trace_distance_half,
)
from .states import (
    DensityMatrix,
    pure_state,
    random_density,
    random_density_min_eig,
    special_E,
    special_F,
    state_delta,
)
from .witnesses import (
    counterexample_bad_bound,
    extremal_psi_check_d2,
    second_derivative_check,
    witness_lower,
    witness_upper_T_gt_beta,
    witness_upper_T_le_beta,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "BoundReport",
    "DensityMatrix",
    "NormKind",
    "OPERATOR",
    "SMinCurve",
    "SuiteConfig",
    "SuiteReport",
    "TRACE",
    "__version__",
    "approx_convergence_rate",
    "bound_report",
    "bures_distance",
    "counterexample_bad_bound",
    "eig_hermitian",
    "extremal_psi_check_d2",
    "fannes_bound",
    "fidelity",
    "ky_fan",
    "lower_bound_pinsker",
    "lower_bound_sharp",
    "matrix_log",
    "norm",
    "pure_state",
    "quadratic_log_form",
    "random_density",
    "random_density_min_eig",
    "relative_entropy",
    "relative_entropy_gradient",
    "replay",
    "rescaled_distance",
    "run_suite",
    "s_of_x",
    "schatten",
    "second_derivative_check",
    "smin_curve",
    "special_E",
    "special_F",
    "state_delta",
    "trace_distance_full",
    "trace_distance_half",
    "upper_bound_brat",
    "upper_bound_log",
    "upper_bound_minus_log_beta",
    "upper_bound_quadratic",
    "upper_bound_sharp_d2",
    "upper_bound_sharp_dgt2",
    "von_neumann_entropy",
    "witness_lower",
    "witness_upper_T_gt_beta",
    "witness_upper_T_le_beta",
]
