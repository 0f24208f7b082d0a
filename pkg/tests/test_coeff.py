from collections import Counter

import pytest

from expderiv import (
    DomainError,
    bell_number,
    coeff_closed,
    coeff_table_recursive,
    enumerate_partitions,
    factorial,
    iter_partitions,
)
from expderiv.coeff import CLOSED_FORM_LIMIT, TABLE_LIMIT


def set_partitions(elements):
    """Every partition of a list into nonempty blocks (test oracle)."""
    if not elements:
        yield []
        return
    first, rest = elements[0], elements[1:]
    for sub in set_partitions(rest):
        for i in range(len(sub)):
            yield sub[:i] + [sub[i] + [first]] + sub[i + 1 :]
        yield [[first]] + sub


def block_type(blocks):
    """Multiplicity tuple of the block sizes of one set partition."""
    if not blocks:
        return ()
    sizes = Counter(len(b) for b in blocks)
    mults = [0] * max(sizes)
    for size, count in sizes.items():
        mults[size - 1] = count
    return tuple(mults)


def test_factorial_values():
    assert factorial(0) == 1
    assert factorial(5) == 120
    assert factorial(20) == 2432902008176640000


def test_factorial_matches_iterated_product():
    product = 1
    for m in range(1, 40):
        product *= m
        assert factorial(m) == product


def test_factorial_rejects_negative():
    with pytest.raises(DomainError):
        factorial(-1)


def test_coeff_closed_examples():
    assert coeff_closed((1,)) == 1
    assert coeff_closed((0, 0, 1)) == 1
    assert coeff_closed((1, 1)) == 3
    assert coeff_closed((2, 1)) == 6


def test_coeff_closed_accepts_trailing_zeros():
    assert coeff_closed([1, 1, 0, 0]) == 3
    assert coeff_closed([]) == 1


def test_coeff_closed_counts_set_partition_types():
    # a coefficient is the number of set partitions with that block-size
    # profile; enumerate them outright for small ground sets
    for n in range(9):
        counts = Counter(block_type(b) for b in set_partitions(list(range(n))))
        for k in iter_partitions(n):
            assert coeff_closed(k) == counts[k], (n, k)


def test_coeff_closed_extremes_are_one():
    for n in range(1, 31):
        single_part = (0,) * (n - 1) + (1,)
        all_ones = (n,)
        assert coeff_closed(single_part) == 1
        assert coeff_closed(all_ones) == 1


def test_coeff_closed_always_positive_integer():
    # the checked division never leaves a remainder
    for n in range(31):
        for k in iter_partitions(n):
            assert coeff_closed(k) >= 1


def test_coeff_closed_order_guard():
    too_big = (0,) * CLOSED_FORM_LIMIT + (1,)
    with pytest.raises(DomainError):
        coeff_closed(too_big)


def test_recursive_base_and_first_steps():
    assert coeff_table_recursive(1).entries == {(1,): 1}
    assert coeff_table_recursive(2).entries == {(2,): 1, (0, 1): 1}
    assert coeff_table_recursive(3).entries == {(3,): 1, (1, 1): 3, (0, 0, 1): 1}


def test_recursive_matches_closed_form():
    for n in range(1, 13):
        table = coeff_table_recursive(n)
        assert set(table.entries) == set(enumerate_partitions(n))
        for k in table:
            assert table[k] == coeff_closed(k), (n, k)


def test_table_lookup_canonicalizes():
    table = coeff_table_recursive(3)
    assert table[(1, 1, 0)] == 3
    assert table.get((9, 9), default=-1) == -1
    assert len(table) == 3


def test_recursive_guards():
    with pytest.raises(DomainError):
        coeff_table_recursive(0)
    with pytest.raises(DomainError):
        coeff_table_recursive(TABLE_LIMIT + 1)


def test_bell_triangle_small_values():
    assert [bell_number(n) for n in range(6)] == [1, 1, 2, 5, 15, 52]
    assert bell_number(10) == 115975


def test_coefficient_sums_are_bell_numbers():
    for n in range(1, 16):
        total = sum(coeff_closed(k) for k in iter_partitions(n))
        assert total == bell_number(n), n


def test_factorial_weighted_sums():
    # weighting each monomial by prod (i-1)!^{k_i} telescopes to n!
    for n in range(1, 16):
        total = 0
        for k in iter_partitions(n):
            weight = 1
            for i, m in enumerate(k, start=1):
                if m:
                    weight *= factorial(i - 1) ** m
            total += coeff_closed(k) * weight
        assert total == factorial(n), n
