"""Integer partitions in multiplicity form.

A partition of n is stored as a tuple of multiplicities: entry ``i - 1``
counts the parts of size ``i``, so ``(1, 2)`` means one part of size 1 and
two parts of size 2, i.e. the partition 2+2+1 of 5.  Canonical tuples carry
no trailing zeros; the empty tuple is the unique partition of 0.

Partitions are enumerated in descending lexicographic order of their
weakly decreasing part lists: ``[n]`` first, ``[1, 1, ..., 1]`` last.
This order is stable and is relied on by golden-file tests downstream.

Two independent code paths exist on purpose: ``enumerate_partitions``
builds the actual partitions, while ``partition_count`` evaluates Euler's
pentagonal-number recurrence.  Agreement between the two is one of the
package's self checks.
"""

import threading
from math import isqrt
from typing import Iterator, Sequence

from .errors import DomainError

Mults = tuple[int, ...]

# Enumerating much past this point produces tens of millions of tuples
# (p(90) is about 5.7e7) and exhausts memory; counting has no such limit.
ENUMERATION_LIMIT = 90

_ZEROS = [(0,) * j for j in range(ENUMERATION_LIMIT + 2)]

# Padded blocks of partitions with a small remaining sum are shared between
# enumeration calls.  Stored lists are never mutated after insertion, so
# concurrent readers are safe; a racing duplicate insert writes equal data.
_MEMO_LIMIT = 28
_block_memo: dict[tuple[int, int], list[Mults]] = {}


def canonical_mults(mults: Sequence[int]) -> Mults:
    """Validate a multiplicity sequence and trim trailing zeros."""
    for m in mults:
        if not isinstance(m, int) or isinstance(m, bool):
            raise DomainError(f"multiplicities must be integers, got {m!r}")
        if m < 0:
            raise DomainError(f"multiplicities must be nonnegative, got {m}")
    mults = tuple(mults)
    end = len(mults)
    while end and mults[end - 1] == 0:
        end -= 1
    return mults[:end]


def order(mults: Sequence[int]) -> int:
    """Sum of part size times multiplicity: the integer being partitioned."""
    return sum(i * m for i, m in enumerate(mults, start=1))


def nonzero_parts(mults: Sequence[int]) -> int:
    """Number of distinct part sizes present (nonzero entries)."""
    if isinstance(mults, tuple):
        return len(mults) - mults.count(0)
    return sum(1 for m in mults if m)


def _padded_block(r: int, m: int) -> list[Mults]:
    """Partitions of ``r`` into parts <= ``m`` as width-``min(m, r)`` tuples.

    Rows are in descending lexicographic part-list order and are padded
    with trailing zeros to a fixed width so that a caller appending the
    multiplicity of a larger part needs a single tuple concatenation.
    """
    if m > r:
        m = r
    key = (r, m)
    hit = _block_memo.get(key)
    if hit is not None:
        return hit
    out: list[Mults] = []
    zeros = _ZEROS
    for p in range(m, 1, -1):
        pm1 = p - 1
        for c in range(r // p, 0, -1):
            rem = r - p * c
            if rem:
                # sub-block width is min(pm1, rem); hoist the padding,
                # the count of part p, and the pad out to width m.
                tail = zeros[pm1 - (rem if rem < pm1 else pm1)] + (c,) + zeros[m - p]
                out.extend([t + tail for t in _padded_block(rem, pm1)])
            else:
                out.append(zeros[pm1] + (c,) + zeros[m - p])
    out.append((r,) + zeros[m - 1])
    if r <= _MEMO_LIMIT:
        _block_memo[key] = out
    return out


def _check_enumeration_order(n: int) -> None:
    if n < 0:
        raise DomainError(f"order must be nonnegative, got {n}")
    if n > ENUMERATION_LIMIT:
        raise DomainError(
            f"enumeration is limited to order {ENUMERATION_LIMIT}, got {n}"
        )


def iter_partitions(n: int) -> Iterator[Mults]:
    """Yield every partition of ``n`` as a canonical multiplicity tuple.

    Order is descending lexicographic on part lists.  Memory stays
    bounded by the largest single block of partitions sharing their
    greatest part, so this is the form to use for large sweeps.
    """
    _check_enumeration_order(n)
    if n == 0:
        yield ()
        return
    zeros = _ZEROS
    for p in range(n, 1, -1):
        pm1 = p - 1
        for c in range(n // p, 0, -1):
            rem = n - p * c
            if rem:
                tail = zeros[pm1 - (rem if rem < pm1 else pm1)] + (c,)
                for t in _padded_block(rem, pm1):
                    yield t + tail
            else:
                yield zeros[pm1] + (c,)
    yield (n,)


def enumerate_partitions(n: int) -> list[Mults]:
    """All partitions of ``n`` in descending lexicographic part-list order."""
    return list(iter_partitions(n))


_count_cache = [1]
_count_lock = threading.Lock()


def partition_count(n: int) -> int:
    """Number of partitions of ``n`` via the pentagonal-number recurrence.

    Independent of the enumeration above; exact for any nonnegative n.
    """
    if n < 0:
        raise DomainError(f"order must be nonnegative, got {n}")
    if n < len(_count_cache):
        return _count_cache[n]
    with _count_lock:
        vals = _count_cache
        while len(vals) <= n:
            m = len(vals)
            total = 0
            k = 1
            while True:
                g = k * (3 * k - 1) // 2
                if g > m:
                    break
                term = vals[m - g]
                g += k
                if g <= m:
                    term += vals[m - g]
                total += term if k & 1 else -term
                k += 1
            vals.append(total)
    return _count_cache[n]


def max_nonzero_parts(n: int) -> int:
    """Largest possible number of distinct part sizes in a partition of n.

    Equals the largest s with s(s+1)/2 <= n, reached by the staircase
    partition 1+2+...+s plus leftovers.  Computed with integer square
    root only; no floating point.
    """
    if n < 1:
        raise DomainError(f"order must be positive, got {n}")
    return (isqrt(8 * n + 1) - 1) // 2
