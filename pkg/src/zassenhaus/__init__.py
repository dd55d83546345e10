"""Disentangling operator exponentials for [X, Y] = uX + vY + c*identity.

Scalar coefficients (coeffs), an independent series recurrence
(recurrence), a dense-matrix kernel (matrices), exact finite-dimensional
realizations (realizations), an identity-check engine (verify), and a CLI
(cli).
"""

from .coeffs import (
    CoeffValue,
    EvalMethod,
    PoleError,
    f_bch,
    g_center,
    g_left,
    g_right,
    gamma_swap,
    integrand,
    phi1,
    zass_coeff,
)
from .matrices import (
    DimensionMismatch,
    as_matrix,
    commutator,
    conjugate_series,
    expm,
    infer_uvc,
    load_matrix,
    rel_residual,
)
from .realizations import (
    AlgebraPair,
    ConventionError,
    DegenerateError,
    DimensionError,
    Ladder,
    affine_2x2,
    heisenberg_3x3,
    lindblad_pair,
    shift_center,
    su11_pair,
)
from .recurrence import (
    OrderError,
    TruncatedSeries,
    beta1_series,
    beta_step,
    c_from_recurrence,
    partial_sum_gr,
)
from .verify import (
    CheckReport,
    CheckResult,
    Side,
    check_ab_structure,
    check_bch,
    check_disentangle,
    check_hadamard,
    check_integral,
    check_lindblad_application,
    check_swap,
    check_truncated_product,
    quadrature_gr,
    report_to_jsonable,
    run_suite,
)

__version__ = "0.1.0"

__all__ = [
    "AlgebraPair",
    "CheckReport",
    "CheckResult",
    "CoeffValue",
    "ConventionError",
    "DegenerateError",
    "DimensionError",
    "DimensionMismatch",
    "EvalMethod",
    "Ladder",
    "OrderError",
    "PoleError",
    "Side",
    "TruncatedSeries",
    "__version__",
    "affine_2x2",
    "as_matrix",
    "beta1_series",
    "beta_step",
    "c_from_recurrence",
    "check_ab_structure",
    "check_bch",
    "check_disentangle",
    "check_hadamard",
    "check_integral",
    "check_lindblad_application",
    "check_swap",
    "check_truncated_product",
    "commutator",
    "conjugate_series",
    "expm",
    "f_bch",
    "g_center",
    "g_left",
    "g_right",
    "gamma_swap",
    "heisenberg_3x3",
    "infer_uvc",
    "integrand",
    "lindblad_pair",
    "load_matrix",
    "partial_sum_gr",
    "phi1",
    "quadrature_gr",
    "rel_residual",
    "report_to_jsonable",
    "run_suite",
    "shift_center",
    "su11_pair",
    "zass_coeff",
]
