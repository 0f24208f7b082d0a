"""Numeric and exact evaluation of derivative expansions.

Given the derivative values d_i = f^(i)(x), the bracketed sum of an
order-n expansion is S = sum_k a_k * prod_i d_i^{k_i}; the derivative
itself is e^{f(x)} * S.  Exact mode works in rationals throughout and
never forms e^{f(x)}: it hands back (f(x), S) so the caller keeps
exactness.  Float mode sums in canonical term order, which makes results
reproducible bit for bit; overflow raises instead of leaking infinities.

A central finite-difference estimator is included as an independent
reference for testing the evaluated derivatives against direct sampling
of e^{f(x)}.
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence, Union

from .errors import DomainError
from .symbolic import Expansion

Number = Union[Fraction, float]

# Central differences balance truncation against cancellation; these
# defaults suit 64-bit arithmetic at the supported orders.
DEFAULT_STEPS = {1: 1e-3, 2: 1e-3, 3: 1e-2, 4: 1e-2, 5: 1e-2, 6: 1e-2}


@dataclass(frozen=True)
class EvaluationPoint:
    """Value of f and its derivatives at one point.

    ``derivs[i - 1]`` is f^(i)(x); it must cover orders 1..n to evaluate
    an order-n expansion.  With ``exact=True`` every entry is coerced to
    Fraction and all arithmetic downstream is rational.
    """

    f0: Number
    derivs: tuple[Number, ...]
    exact: bool = False

    def __init__(self, f0, derivs: Sequence, exact: bool = False):
        coerce = Fraction if exact else float
        object.__setattr__(self, "f0", coerce(f0))
        object.__setattr__(self, "derivs", tuple(coerce(d) for d in derivs))
        object.__setattr__(self, "exact", exact)


def evaluate_sum(expansion: Expansion, point: EvaluationPoint) -> Number:
    """The bracketed sum S, without the e^f prefactor.

    Exact mode returns a Fraction with no rounding anywhere; float mode
    returns the 64-bit sum in canonical term order.
    """
    if len(point.derivs) < expansion.order:
        raise DomainError(
            f"order-{expansion.order} evaluation needs derivatives 1.."
            f"{expansion.order}, got {len(point.derivs)}"
        )
    derivs = point.derivs
    total: Number = Fraction(0) if point.exact else 0.0
    try:
        for coeff, mults in expansion.terms:
            term: Number = coeff if point.exact else float(coeff)
            for pos, m in enumerate(mults):
                if m:
                    term *= derivs[pos] ** m
            total += term
    except OverflowError:
        raise OverflowError("float evaluation overflowed; use exact mode") from None
    if not point.exact and not math.isfinite(total):
        raise OverflowError("float evaluation overflowed; use exact mode")
    return total


def evaluate_derivative(
    expansion: Expansion, point: EvaluationPoint
) -> Union[float, tuple[Fraction, Fraction]]:
    """The full derivative value e^{f(x)} * S.

    Float mode returns one number.  Exact mode cannot represent e^{f0},
    so it returns the pair (f0, S) with the contract that the true value
    is e^{f0} * S.
    """
    total = evaluate_sum(expansion, point)
    if point.exact:
        return point.f0, total
    try:
        value = math.exp(point.f0) * total
    except OverflowError:
        raise OverflowError("float evaluation overflowed; use exact mode") from None
    if not math.isfinite(value):
        raise OverflowError("float evaluation overflowed; use exact mode")
    return value


def finite_difference_reference(
    g: Callable[[float], float], x: float, n: int, h: float | None = None
) -> float:
    """Order-n central finite difference of ``g`` at ``x``.

    Accuracy degrades for very small or very large steps in the usual
    way; the defaults keep truncation and cancellation balanced for
    well-scaled functions.
    """
    if n < 1 or n > 6:
        raise DomainError(f"finite differences support orders 1..6, got {n}")
    if h is None:
        h = DEFAULT_STEPS[n]
    if h <= 0:
        raise DomainError(f"step must be positive, got {h}")
    half = n / 2
    total = 0.0
    for j in range(n + 1):
        term = math.comb(n, j) * g(x + (half - j) * h)
        total += term if j % 2 == 0 else -term
    return total / h**n
