"""Built-in consistency checks between the independent computation paths.

Each check pits two routes to the same numbers against each other:

* closed-form coefficients against the differentiation recurrence,
* the fast expansion against the literal term-rewriting oracle,
* coefficient sums against Bell numbers from the Bell triangle,
* the weighted coefficient sum with d_i = (i-1)!, which telescopes to n!
  (the expansion of 1/(1-x) seen through its logarithm).

The Bell triangle below is the only place Bell numbers are computed; it
shares nothing with the coefficient formulas it is used to check.
"""

from fractions import Fraction
from typing import NamedTuple

from .coeff import coeff_closed, coeff_table_recursive, factorial
from .errors import DomainError
from .evaluation import EvaluationPoint, evaluate_sum
from .partition import iter_partitions
from .symbolic import ORACLE_LIMIT, expand, oracle_expand

# Recursion tables beyond this take minutes and prove nothing new.
VERIFY_LIMIT = 40

_bell_rows = [[1]]


def bell_number(n: int) -> int:
    """nth Bell number via the Bell triangle (B_0 = B_1 = 1, B_2 = 2...)."""
    if n < 0:
        raise DomainError(f"Bell numbers need n >= 0, got {n}")
    while len(_bell_rows) <= n:
        prev = _bell_rows[-1]
        row = [prev[-1]]
        for v in prev:
            row.append(row[-1] + v)
        _bell_rows.append(row)
    return _bell_rows[n][0]


class CheckResult(NamedTuple):
    name: str
    ok: bool
    detail: str


def _check_closed_vs_recursive(max_order: int) -> CheckResult:
    name = f"closed formula matches recursion (orders 1..{max_order})"
    for n in range(1, max_order + 1):
        table = coeff_table_recursive(n)
        seen = set()
        for k in iter_partitions(n):
            seen.add(k)
            closed = coeff_closed(k)
            if table.get(k) != closed:
                return CheckResult(
                    name, False, f"order {n}, {k}: {table.get(k)} != {closed}"
                )
        if seen != set(table.entries):
            return CheckResult(name, False, f"order {n}: key sets differ")
    return CheckResult(name, True, "")


def _check_expand_vs_oracle(max_order: int) -> CheckResult:
    top = min(max_order, ORACLE_LIMIT)
    name = f"expansion matches differentiation oracle (orders 0..{top})"
    for n in range(top + 1):
        if expand(n) != oracle_expand(n):
            return CheckResult(name, False, f"order {n} differs")
    return CheckResult(name, True, "")


def _check_bell_identity(max_order: int) -> CheckResult:
    name = f"coefficient sums are Bell numbers (orders 1..{max_order})"
    for n in range(1, max_order + 1):
        total = sum(coeff_closed(k) for k in iter_partitions(n))
        if total != bell_number(n):
            return CheckResult(
                name, False, f"order {n}: {total} != {bell_number(n)}"
            )
    return CheckResult(name, True, "")


def _check_factorial_identity(max_order: int) -> CheckResult:
    name = f"factorial-weighted sums equal n! (orders 1..{max_order})"
    for n in range(1, max_order + 1):
        point = EvaluationPoint(
            0, [factorial(i - 1) for i in range(1, n + 1)], exact=True
        )
        if evaluate_sum(expand(n), point) != Fraction(factorial(n)):
            return CheckResult(name, False, f"order {n} differs")
    return CheckResult(name, True, "")


def run_verification(max_order: int) -> list[CheckResult]:
    """Run every built-in check up to ``max_order`` and report each one."""
    if max_order < 1:
        raise DomainError(f"verification order must be positive, got {max_order}")
    if max_order > VERIFY_LIMIT:
        raise DomainError(
            f"verification order is limited to {VERIFY_LIMIT}, got {max_order}"
        )
    return [
        _check_closed_vs_recursive(max_order),
        _check_expand_vs_oracle(max_order),
        _check_bell_identity(max_order),
        _check_factorial_identity(max_order),
    ]
