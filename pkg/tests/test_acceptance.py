"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run with ``pytest -s tests/test_acceptance.py`` to see the lines as they
complete.  Every test also enforces its runtime budget.
"""

import math
import time
from pathlib import Path

from expderiv import (
    EvaluationPoint,
    bell_number,
    coeff_closed,
    coeff_table_recursive,
    enumerate_partitions,
    evaluate_derivative,
    evaluate_sum,
    expand,
    factorial,
    finite_difference_reference,
    iter_partitions,
    max_nonzero_parts,
    oracle_expand,
    partition_count,
)
from expderiv.cli import main

GOLDEN = Path(__file__).parent / "golden"


class _Budget:
    def __init__(self, number, description, seconds):
        self.number = number
        self.description = description
        self.seconds = seconds

    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, exc_type, exc, tb):
        if exc_type is not None:
            print(f"FAIL criterion {self.number}: {self.description}")
            return False
        elapsed = time.perf_counter() - self.start
        if elapsed >= self.seconds:
            print(
                f"FAIL criterion {self.number}: {self.description} "
                f"({elapsed:.2f}s over the {self.seconds:g}s budget)"
            )
            raise AssertionError(
                f"criterion {self.number} took {elapsed:.2f}s "
                f"(budget {self.seconds:g}s)"
            )
        print(
            f"PASS criterion {self.number}: {self.description} ({elapsed:.2f}s)"
        )
        return False


def test_criterion_1_theorem_agreement():
    with _Budget(1, "closed form equals recursion for n <= 12", 1.0):
        for n in range(1, 13):
            table = coeff_table_recursive(n)
            partitions = enumerate_partitions(n)
            assert set(table.entries) == set(partitions)
            for k in partitions:
                assert table[k] == coeff_closed(k), (n, k)


def test_criterion_2_oracle_equivalence():
    with _Budget(2, "expansion equals differentiation oracle for n <= 10", 10.0):
        for n in range(11):
            assert expand(n) == oracle_expand(n), n


def test_criterion_3_bell_identity():
    with _Budget(3, "coefficient sums equal Bell numbers for n <= 15", 1.0):
        assert bell_number(5) == 52
        assert bell_number(10) == 115975
        for n in range(1, 16):
            assert sum(t.coeff for t in expand(n)) == bell_number(n), n


def test_criterion_4_factorial_identity():
    with _Budget(4, "factorial-weighted sums equal n! for n <= 15", 1.0):
        for n in range(1, 16):
            point = EvaluationPoint(
                0, [factorial(i - 1) for i in range(1, n + 1)], exact=True
            )
            assert evaluate_sum(expand(n), point) == factorial(n), n


def test_criterion_5_partition_cross_check():
    with _Budget(5, "enumeration length equals pentagonal p(n) for n <= 60", 5.0):
        assert partition_count(5) == 7
        assert partition_count(10) == 42
        for n in range(61):
            assert len(enumerate_partitions(n)) == partition_count(n), n


def test_criterion_6_nonzero_bound_tightness():
    with _Budget(6, "distinct-part bound is tight for n <= 60", 5.0):
        for s in range(2, 11):
            tri = s * (s + 1) // 2
            assert max_nonzero_parts(tri) == s
            assert max_nonzero_parts(tri - 1) == s - 1
        for n in range(1, 61):
            observed = max(len(k) - k.count(0) for k in iter_partitions(n))
            assert observed == max_nonzero_parts(n), n


def test_criterion_7_numeric_agreement():
    cases = [
        # g(x) = e^{f(x)}, (f0, derivatives of f), points, step for n in {3, 4}
        (
            lambda x: math.exp(x * x),
            lambda x: (x * x, [2 * x, 2.0, 0.0, 0.0]),
            [0.2, 0.5, 0.8],
            3e-3,
        ),
        (
            lambda x: math.exp(math.sin(x)),
            lambda x: (
                math.sin(x),
                [math.cos(x), -math.sin(x), -math.cos(x), math.sin(x)],
            ),
            [0.3, 0.9, 1.7],
            3e-3,
        ),
        (
            lambda x: 1.0 / (1.0 - x),
            lambda x: (
                -math.log(1.0 - x),
                [math.factorial(i - 1) / (1.0 - x) ** i for i in (1, 2, 3, 4)],
            ),
            [0.1, 0.3, 0.45],
            2e-3,
        ),
    ]
    with _Budget(7, "derivatives match finite differences to 1e-4", 1.0):
        for g, data, points, coarse_h in cases:
            for n in (1, 2, 3, 4):
                h = 1e-3 if n <= 2 else coarse_h
                for x in points:
                    f0, derivs = data(x)
                    ours = evaluate_derivative(
                        expand(n), EvaluationPoint(f0, derivs[:n])
                    )
                    reference = finite_difference_reference(g, x, n, h)
                    assert abs(reference - ours) <= 1e-4 * abs(ours), (n, x)


def test_criterion_8_cli_contract(capsys):
    with _Budget(8, "command-line contract (golden files, exit codes)", 5.0):
        for order in (1, 2, 3, 5):
            for fmt in ("text", "latex", "json"):
                code = main(["expand", "--order", str(order), "--format", fmt])
                out = capsys.readouterr().out
                expected = (GOLDEN / f"expand_{order}_{fmt}.txt").read_text()
                assert code == 0 and out == expected, (order, fmt)

        assert main(["expand", "--order", "nope"]) == 1
        assert main(["coeff", "--order", "4", "--mult", "1,1"]) == 2
        captured = capsys.readouterr()
        assert captured.out == ""

        assert main(["verify", "--max-order", "10"]) == 0
        lines = capsys.readouterr().out.splitlines()
        assert len(lines) == 4 and all(l.startswith("PASS ") for l in lines)
