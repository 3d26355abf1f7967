"""The brute-force oracle itself, pinned against hand-computed tables.

Everything here is checked against literals or definitions, never against
the library, so the oracle stays a trustworthy referee for the other
test files.
"""

import math

import pytest

from unitpoly.errors import BudgetExceeded
from unitpoly.oracle import (
    FunctionTable,
    oracle_bivariate_table,
    oracle_enumerate_reduced,
    oracle_factorial_valuation,
    oracle_function_of,
    oracle_is_latin_square,
    oracle_is_permutation,
    oracle_is_unit_valued,
    oracle_max_reduced_degree,
)


@pytest.mark.parametrize(
    "i, expected",
    [(0, 0), (1, 0), (2, 1), (3, 1), (4, 3), (5, 3), (6, 4), (7, 4), (8, 7), (10, 8)],
)
def test_factorial_valuation_table(i, expected):
    assert oracle_factorial_valuation(i) == expected


def test_factorial_valuation_definition():
    for i in range(1, 80):
        f = math.factorial(i)
        assert f % (1 << oracle_factorial_valuation(i)) == 0
        assert f % (1 << (oracle_factorial_valuation(i) + 1)) != 0


@pytest.mark.parametrize(
    "n, expected",
    [(1, 0), (2, 1), (3, 1), (4, 2), (5, 3), (6, 3), (7, 3), (8, 4), (9, 5), (10, 5)],
)
def test_max_reduced_degree_table(n, expected):
    assert oracle_max_reduced_degree(n) == expected


def test_function_table_points():
    assert list(FunctionTable(3, "units", (1, 1, 1, 1)).points()) == [1, 3, 5, 7]
    assert list(FunctionTable(2, "ring", (0, 1, 2, 3)).points()) == [0, 1, 2, 3]


def test_function_of_squares_plus_one():
    # x^2 + 1 is constant 2 on the odd residues mod 8
    table = oracle_function_of((1, 0, 1), 3)
    assert table.values == (2, 2, 2, 2)
    ring = oracle_function_of((1, 0, 1), 3, domain="ring")
    assert ring.values == (1, 2, 5, 2, 1, 2, 5, 2)


def test_function_of_budget():
    with pytest.raises(BudgetExceeded):
        oracle_function_of((1,), 13)


def test_enumerate_reduced_counts():
    assert sum(1 for _ in oracle_enumerate_reduced(2)) == 8
    assert sum(1 for _ in oracle_enumerate_reduced(3)) == 32
    vecs = {p.coeffs for p in oracle_enumerate_reduced(2)}
    assert len(vecs) == 8
    assert all(len(v) == 2 for v in vecs)


def test_enumerate_reduced_budget():
    with pytest.raises(BudgetExceeded):
        next(oracle_enumerate_reduced(7))


def test_permutation_and_unit_predicates():
    identity = FunctionTable(3, "units", (1, 3, 5, 7))
    assert oracle_is_permutation(identity)
    assert oracle_is_unit_valued(identity)
    squashed = FunctionTable(3, "units", (1, 1, 5, 7))
    assert not oracle_is_permutation(squashed)
    mixed = FunctionTable(3, "units", (1, 2, 5, 7))
    assert not oracle_is_unit_valued(mixed)
    # injective but escaping the domain is not a permutation of it
    assert not oracle_is_permutation(mixed)


def test_bivariate_table_addition():
    # coefficient matrix for x + y
    table = oracle_bivariate_table(((0, 1), (1, 0)), 2)
    assert table == [[(a + b) % 4 for b in range(4)] for a in range(4)]
    assert oracle_is_latin_square(table)


def test_latin_square_rejects_repeats():
    assert not oracle_is_latin_square([[0, 1], [0, 1]])
    assert oracle_is_latin_square([[0, 1], [1, 0]])
