"""Lerch transcendent evaluation and prime-indexed finite-sum identity checks."""

from .complexcore import complex_pow, gamma, log_gamma, principal_log
from .errors import ConvergenceError, DomainError, LerchError, PoleError
from .identities import (
    IdentityReport,
    RecurrenceParams,
    catalan_constant,
    check_catalan_sum,
    check_product_identity,
    check_recurrence,
    check_tan_sum,
    check_theorem,
    theorem_lhs,
    theorem_rhs,
    unity_filter_sum,
)
from .lerch import (
    EvalResult,
    LerchParams,
    hurwitz_zeta,
    lerch_phi,
    lerch_phi_integral,
    lerch_phi_series,
    polylog,
    shift_v,
)
from .numtheory import TheoremParams, ValidationReport, is_prime, validate_theorem_params

__version__ = "0.1.0"

__all__ = [
    "ConvergenceError", "DomainError", "LerchError", "PoleError",
    "complex_pow", "gamma", "log_gamma", "principal_log",
    "EvalResult", "LerchParams", "hurwitz_zeta", "lerch_phi",
    "lerch_phi_integral", "lerch_phi_series", "polylog", "shift_v",
    "TheoremParams", "ValidationReport", "is_prime", "validate_theorem_params",
    "IdentityReport", "RecurrenceParams", "catalan_constant",
    "check_catalan_sum", "check_product_identity", "check_recurrence",
    "check_tan_sum", "check_theorem", "theorem_lhs", "theorem_rhs",
    "unity_filter_sum",
]
