"""Exact-arithmetic toolkit for pseudo-polynomial sequences.

Congruence-preservation audits, binomial transforms, Hankel determinants
with primorial-power divisibility, Kronecker-style rationality detection,
Chebyshev theta asymptotics, and transfinite-diameter bounds for hedgehog
compacts.
"""

from .analytic import (
    DIRECTION_TOL,
    RESIDUAL_TOL,
    ExponentIdentityReport,
    ExponentIdentitySweep,
    Hedgehog,
    SingularityReport,
    asymptotic_ratio,
    chebyshev_theta,
    dubinin_bound,
    estimate_transfinite_diameter,
    exponent_identity_check,
    exponent_identity_sweep,
    polya_bound_for_series,
    singular_directions,
    theta_partial_sum,
)
from .audit import (
    HALF_E,
    SQRT_E,
    AuditConfig,
    AuditReport,
    VERDICT_CONGRUENCE_VIOLATION,
    VERDICT_POLYNOMIAL,
    VERDICT_RATIONAL_NON_POLYNOMIAL,
    VERDICT_UNDETERMINED,
    is_power_of_one_minus_x,
    ruzsa_audit,
)
from .binomial import (
    DivisibilityReport,
    ExactMatrix,
    PrimorialTable,
    binomial_rows,
    binomial_transform,
    check_primorial_divisibility,
    inverse_binomial_transform,
    lower_triangular_L,
    primorials,
)
from .core import (
    Exact,
    ExactSequence,
    InputError,
    IntPolynomial,
    InternalInvariantError,
    NumericError,
)
from .hankel import (
    HankelRecord,
    InvarianceReport,
    RationalFunction,
    RationalityDetection,
    detect_rationality,
    hankel_determinant,
    hankel_matrix,
    hankel_table,
    max_order,
    normalized_det_growth,
    padic_valuation,
    verify_transform_invariance,
)
from .sequences import (
    CongruenceReport,
    GrowthReport,
    Violation,
    check_congruences,
    eval_polynomial_sequence,
    generate_hall_like,
    generate_primary,
    growth_rate,
    polynomial_certificate,
)

__version__ = "0.1.0"

__all__ = [
    "AuditConfig",
    "AuditReport",
    "CongruenceReport",
    "DIRECTION_TOL",
    "DivisibilityReport",
    "Exact",
    "ExactMatrix",
    "ExactSequence",
    "ExponentIdentityReport",
    "ExponentIdentitySweep",
    "GrowthReport",
    "HALF_E",
    "HankelRecord",
    "Hedgehog",
    "InputError",
    "IntPolynomial",
    "InternalInvariantError",
    "InvarianceReport",
    "NumericError",
    "PrimorialTable",
    "RESIDUAL_TOL",
    "RationalFunction",
    "RationalityDetection",
    "SQRT_E",
    "SingularityReport",
    "VERDICT_CONGRUENCE_VIOLATION",
    "VERDICT_POLYNOMIAL",
    "VERDICT_RATIONAL_NON_POLYNOMIAL",
    "VERDICT_UNDETERMINED",
    "Violation",
    "asymptotic_ratio",
    "binomial_rows",
    "binomial_transform",
    "chebyshev_theta",
    "check_congruences",
    "check_primorial_divisibility",
    "detect_rationality",
    "dubinin_bound",
    "estimate_transfinite_diameter",
    "eval_polynomial_sequence",
    "exponent_identity_check",
    "exponent_identity_sweep",
    "generate_hall_like",
    "generate_primary",
    "growth_rate",
    "hankel_determinant",
    "hankel_matrix",
    "hankel_table",
    "inverse_binomial_transform",
    "is_power_of_one_minus_x",
    "lower_triangular_L",
    "max_order",
    "normalized_det_growth",
    "padic_valuation",
    "polya_bound_for_series",
    "polynomial_certificate",
    "primorials",
    "ruzsa_audit",
    "singular_directions",
    "theta_partial_sum",
    "verify_transform_invariance",
]
