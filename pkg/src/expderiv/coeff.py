"""Exact integer coefficients of the derivative expansion.

For a partition k of n (multiplicity form), the coefficient of the
monomial prod_i (f^(i))^{k_i} in the nth derivative expansion is

    n! / (prod_i k_i! * prod_i (i!)^{k_i})

an exact nonnegative integer: it counts the set partitions of an n-element
set having k_i blocks of size i.  ``coeff_closed`` evaluates this form
directly; ``coeff_table_recursive`` rebuilds the whole order-n family by
repeatedly differentiating the order-1 base case instead, which gives an
independent route to the same numbers:

    a[k, n+1] = a[k - e1, n] + sum_i (k_i + 1) * a[k + e_i - e_{i+1}, n]

where e_i bumps the multiplicity of part size i and any reference to a
vector with a negative entry (or the wrong order) contributes zero.
Everything here is arbitrary-precision integer arithmetic; there is no
floating point in this module.
"""

import threading
from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import DomainError
from .partition import Mults, canonical_mults, iter_partitions, order

# n! for n in the tens of thousands is still fine to compute, but the
# closed form is quadratic-ish in digit count beyond this and callers
# almost certainly passed a wrong order.
CLOSED_FORM_LIMIT = 10_000

# Full tables hold one entry per partition; p(60) is already ~1e6.
TABLE_LIMIT = 60

_fact_cache = [1]
_fact_lock = threading.Lock()


def factorial(m: int) -> int:
    """Exact m!, memoized up to the largest argument seen."""
    if m < 0:
        raise DomainError(f"factorial argument must be nonnegative, got {m}")
    if m < len(_fact_cache):
        return _fact_cache[m]
    with _fact_lock:
        vals = _fact_cache
        f = vals[-1]
        for i in range(len(vals), m + 1):
            f *= i
            vals.append(f)
    return _fact_cache[m]


def coeff_closed(mults: Sequence[int]) -> int:
    """Expansion coefficient of the monomial described by ``mults``.

    Accepts non-canonical input (trailing zeros are trimmed).  The
    division is checked: a remainder would mean the invariants are
    broken, so it aborts rather than truncate.
    """
    k = canonical_mults(mults)
    n = order(k)
    if n > CLOSED_FORM_LIMIT:
        raise DomainError(f"order {n} exceeds closed-form limit {CLOSED_FORM_LIMIT}")
    den = 1
    for i, m in enumerate(k, start=1):
        if m:
            den *= factorial(m) * factorial(i) ** m
    q, r = divmod(factorial(n), den)
    if r:
        raise AssertionError(
            f"coefficient division left remainder {r} for multiplicities {k}"
        )
    return q


@dataclass(frozen=True)
class CoefficientTable:
    """All coefficients of one derivative order, keyed by partition."""

    n: int
    entries: dict[Mults, int]

    def __getitem__(self, mults: Sequence[int]) -> int:
        return self.entries[canonical_mults(mults)]

    def get(self, mults: Sequence[int], default: int = 0) -> int:
        return self.entries.get(canonical_mults(mults), default)

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[Mults]:
        return iter(self.entries)


def coeff_table_recursive(n: int) -> CoefficientTable:
    """Coefficient table for order ``n`` grown step by step from order 1.

    Never consults the closed form: each step applies the
    differentiation recurrence to the previous table, so comparing the
    result against ``coeff_closed`` is a genuine cross-check.
    """
    if n < 1:
        raise DomainError(f"table order must be positive, got {n}")
    if n > TABLE_LIMIT:
        raise DomainError(f"order {n} exceeds table limit {TABLE_LIMIT}")
    table: dict[Mults, int] = {(1,): 1}
    for m in range(1, n):
        nxt: dict[Mults, int] = {}
        get = table.get
        for k in iter_partitions(m + 1):
            # chain-rule predecessor k - e1 (canonical by construction:
            # k has order >= 2 here, so the result cannot be empty)
            total = get((k[0] - 1,) + k[1:], 0) if k[0] else 0
            # product-rule predecessors k + e_i - e_{i+1}; absent larger
            # part means a negative entry, i.e. a zero contribution
            for pos in range(1, len(k)):
                if k[pos]:
                    pred = list(k)
                    pred[pos] -= 1
                    pred[pos - 1] += 1
                    if pred[-1] == 0:
                        del pred[-1]
                    total += (k[pos - 1] + 1) * get(tuple(pred), 0)
            nxt[k] = total
        table = nxt
    return CoefficientTable(n, table)
