"""Weight distributions of irreducible cyclic codes from closed-form period polynomials."""

from .cyclotomy import PeriodFactorization, reduced_period_polynomial_direct
from .finite_field import build_field
from .oracle import oracle_weight_distribution, sweep, verify
from .period_poly import factorize_reduced_period, semiprimitive_factorization
from .weights import classify, code_params, weight_distribution

__all__ = [
    "PeriodFactorization",
    "build_field",
    "classify",
    "code_params",
    "factorize_reduced_period",
    "oracle_weight_distribution",
    "reduced_period_polynomial_direct",
    "semiprimitive_factorization",
    "sweep",
    "verify",
    "weight_distribution",
]
