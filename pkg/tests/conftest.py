"""Shared fixtures: golden families, the classical table of order-2 examples,
and seeded random generators for the property corpora."""

from __future__ import annotations

import random
from fractions import Fraction

import pytest

from recform import RecurrenceRelation, Sequence, SequenceFamily


@pytest.fixture
def fib_lucas() -> SequenceFamily:
    return SequenceFamily(RecurrenceRelation((1, 1)), [(0, 1), (2, 1)])


@pytest.fixture
def fibonacci() -> Sequence:
    return Sequence(RecurrenceRelation((1, 1)), (0, 1))


@pytest.fixture
def narayana() -> SequenceFamily:
    return SequenceFamily(
        RecurrenceRelation((1, 0, 1)), [(0, 1, 1), (3, 1, 1), (3, 0, 2)]
    )


@pytest.fixture
def tribonacci() -> Sequence:
    return Sequence(RecurrenceRelation((1, 1, 1)), (0, 0, 1))


# (A, B), initial rows, expected step matrix, expected (c_h, c_gh, c_g), delta
TABLE_BINARY = [
    ((0, 4), [(1, 2), (2, 3)], [[2, 0], [7, -2]], (-7, 4, 0), -1),
    (
        (2, -1),
        [(2, 3), (4, 5)],
        [[Fraction(1, 2), Fraction(1, 2)], [Fraction(-1, 2), Fraction(3, 2)]],
        (1, -2, 1),
        -2,
    ),
    (
        (7, -10),
        [(0, 1), (2, 7)],
        [[Fraction(7, 2), Fraction(1, 2)], [Fraction(9, 2), Fraction(7, 2)]],
        (-9, 0, 1),
        -2,
    ),
    ((7, -10), [(1, 2), (1, 5)], [[2, 0], [0, 5]], (0, 9, 0), 3),
    (
        (4, -1),
        [(1, 2), (3, 4)],
        [[Fraction(13, 2), Fraction(-3, 2)], [Fraction(23, 2), Fraction(-5, 2)]],
        (-23, 18, -3),
        -2,
    ),
]

# coefficients of the ternary golden form in graded-lex order (x1 > x2 > x3)
NARAYANA_TILDE_COEFFS = (-187, 159, -45, -189, 306, -117, 1, -45, 63, -27)


def binary_family(a, b, rows) -> SequenceFamily:
    return SequenceFamily(RecurrenceRelation((b, a)), rows)


def random_rat(rng: random.Random, height: int, ints_only: bool = False) -> Fraction:
    num = rng.randint(-height, height)
    den = 1 if ints_only else rng.randint(1, height)
    return Fraction(num, den)


def random_relation(
    rng: random.Random, k: int, height: int = 20, ints_only: bool = False
) -> RecurrenceRelation:
    while True:
        gammas = [random_rat(rng, height, ints_only) for _ in range(k)]
        if gammas[0] != 0:
            return RecurrenceRelation(gammas)


def random_family(
    rng: random.Random, k: int, height: int = 20, ints_only: bool = False
) -> SequenceFamily:
    relation = random_relation(rng, k, height, ints_only)
    while True:
        rows = [[random_rat(rng, height, ints_only) for _ in range(k)] for _ in range(k)]
        family = SequenceFamily(relation, rows)
        if family.delta() != 0:
            return family


def approx_matrix_close(a, b, slack: float = 1e-12) -> bool:
    """Entry-wise closeness for mixed Fraction/ComplexApprox grids.

    Uses the carried error bounds plus a small floating slack, so exact
    entries must match exactly.
    """
    from recform import ComplexApprox

    for row_a, row_b in zip(a, b):
        for x, y in zip(row_a, row_b):
            if isinstance(x, Fraction) and isinstance(y, Fraction):
                if x != y:
                    return False
                continue
            xa = x if isinstance(x, ComplexApprox) else ComplexApprox.from_exact(x)
            ya = y if isinstance(y, ComplexApprox) else ComplexApprox.from_exact(y)
            allowance = xa.error_bound + ya.error_bound + slack * (1 + abs(xa.value))
            if abs(xa.value - ya.value) > allowance:
                return False
    return True


def grid_matmul(a, b):
    """Row-major product for mixed Fraction/ComplexApprox grids."""
    inner = len(b)
    width = len(b[0])
    out = []
    for row in a:
        out_row = []
        for j in range(width):
            acc = Fraction(0)
            for t in range(inner):
                acc = acc + row[t] * b[t][j]
            out_row.append(acc)
        out.append(tuple(out_row))
    return tuple(out)
