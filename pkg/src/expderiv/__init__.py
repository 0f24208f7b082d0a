"""Exact expansion, verification, and evaluation of derivatives of exp(f(x)).

The nth derivative of e^{f(x)} equals e^{f(x)} times a sum over the
integer partitions of n, one monomial in the derivative symbols f^(i)
per partition, with an exact integer coefficient.  This package builds
those expansions, computes the coefficients by two independent methods,
evaluates the result exactly or in floats, and cross-checks everything
against combinatorial identities.
"""

from .coeff import (
    CoefficientTable,
    coeff_closed,
    coeff_table_recursive,
    factorial,
)
from .errors import DomainError
from .evaluation import (
    EvaluationPoint,
    evaluate_derivative,
    evaluate_sum,
    finite_difference_reference,
)
from .partition import (
    ENUMERATION_LIMIT,
    Mults,
    canonical_mults,
    enumerate_partitions,
    iter_partitions,
    max_nonzero_parts,
    nonzero_parts,
    order,
    partition_count,
)
from .symbolic import (
    Expansion,
    Term,
    expand,
    expansion_from_json,
    oracle_expand,
    render,
)
from .verify import CheckResult, bell_number, run_verification

__version__ = "0.1.0"

__all__ = [
    "CheckResult",
    "CoefficientTable",
    "DomainError",
    "ENUMERATION_LIMIT",
    "EvaluationPoint",
    "Expansion",
    "Mults",
    "Term",
    "bell_number",
    "canonical_mults",
    "coeff_closed",
    "coeff_table_recursive",
    "enumerate_partitions",
    "evaluate_derivative",
    "evaluate_sum",
    "expand",
    "expansion_from_json",
    "factorial",
    "finite_difference_reference",
    "iter_partitions",
    "max_nonzero_parts",
    "nonzero_parts",
    "oracle_expand",
    "order",
    "partition_count",
    "render",
    "run_verification",
]
