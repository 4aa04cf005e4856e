"""Triangle generation routes and their structural invariants."""

from __future__ import annotations

import math
from fractions import Fraction

import pytest

from morganvoyce import (
    binom,
    hereditary_rows,
    reciprocal_row,
    row_closed_form,
    row_hereditary,
    row_three_term,
    three_term_rows,
)

# Rows 1..8 of OEIS A078812, including the explicit k = 0 zero.
GOLDEN_ROWS = {
    1: [0, 1],
    2: [0, 2, 1],
    3: [0, 3, 4, 1],
    4: [0, 4, 10, 6, 1],
    5: [0, 5, 20, 21, 8, 1],
    6: [0, 6, 35, 56, 36, 10, 1],
    7: [0, 7, 56, 126, 120, 55, 12, 1],
    8: [0, 8, 84, 252, 330, 220, 78, 14, 1],
}


def test_closed_form_golden_rows():
    for n, row in GOLDEN_ROWS.items():
        assert row_closed_form(n) == row
    assert row_closed_form(8)[4] == 330


def test_three_term_golden_rows():
    assert row_three_term(2) == [0, 2, 1]  # Q2 = x(x + 2)
    assert row_three_term(3) == [0, 3, 4, 1]
    assert row_three_term(7) == [0, 7, 56, 126, 120, 55, 12, 1]


def test_hereditary_integer_weight_golden_row():
    assert row_hereditary(4, lambda k: k) == [0, 4, 10, 6, 1]


def test_rows_reject_bad_n():
    for fn in (row_closed_form, row_three_term, reciprocal_row):
        with pytest.raises(ValueError):
            fn(0)


def test_three_routes_agree_exactly_to_200(rows500):
    tt = three_term_rows(200)
    hh = hereditary_rows(200, lambda k: k)
    for n in range(1, 201):
        closed = rows500[n]
        assert tt[n] == closed
        assert all(c.denominator == 1 for c in hh[n])
        assert [int(c) for c in hh[n]] == closed


def test_row_shape_invariants_to_500(rows500):
    for n in range(1, 501):
        row = rows500[n]
        assert row[0] == 0
        assert row[1] == n
        assert row[-1] == 1
        # log-concavity over the positive entries k = 1..n
        for k in range(2, n):
            assert row[k] * row[k] >= row[k - 1] * row[k + 1]
        # unimodal: rises then falls
        k = 1
        while k < n and row[k + 1] >= row[k]:
            k += 1
        while k < n:
            assert row[k + 1] <= row[k]
            k += 1


def test_unit_weight_gives_shifted_pascal():
    rows = hereditary_rows(50, lambda k: 1)
    for n in range(1, 51):
        assert [int(c) for c in rows[n]] == [binom(n - 1, k - 1) for k in range(n + 1)]
    assert rows[5][3] == 6  # C(4, 2)


def test_reciprocal_weight_counts_block_partitions(set_partition_counts):
    # With g(k) = 1/k!, row n scaled by n! counts partitions of an n-set into
    # k ordered blocks: n! * coeff(n, k) = k! * S(n, k).
    rows = hereditary_rows(12, lambda k: Fraction(1, math.factorial(k)))
    for n in range(1, 13):
        stirling = set_partition_counts(n)
        for k in range(n + 1):
            assert rows[n][k] * math.factorial(n) == math.factorial(k) * stirling[k]
    assert rows[4][2] == Fraction(7, 12)  # 2! * S(4,2) / 4! with S(4,2) = 7


def test_hereditary_rows_have_exact_zero_head():
    rows = hereditary_rows(10, lambda k: Fraction(1, k))
    for n in range(1, 11):
        assert rows[n][0] == 0
        assert len(rows[n]) == n + 1


def test_reciprocal_row_values():
    assert reciprocal_row(4)[0] == 1  # C(7, 0)
    assert reciprocal_row(4)[2] == 10  # C(5, 2) = A(4, 2)
    assert reciprocal_row(5)[2] == 21  # C(7, 2) = A(5, 3)


def test_reciprocal_row_is_reversed_row_to_100(rows500):
    for n in range(1, 101):
        assert reciprocal_row(n) == rows500[n][::-1]
