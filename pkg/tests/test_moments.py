"""Row sums, derivative sums, and the exact mean/variance closed forms."""

from __future__ import annotations

import math
from fractions import Fraction

import pytest

from morganvoyce import (
    deriv1_closed,
    deriv2_closed,
    fib,
    kepler_gap,
    moment_summary,
    ratio_to_float,
    row_sum,
)

INV_SQRT5 = 1.0 / math.sqrt(5.0)
B2 = 2.0 / (5.0 * math.sqrt(5.0))


def test_row_sum_values():
    assert row_sum(1) == 1  # F2
    assert row_sum(4) == 21  # F8
    assert row_sum(8) == 987  # 8+84+252+330+220+78+14+1 = F16


def test_row_sums_equal_even_fibonacci_to_120():
    for n in range(1, 121):
        assert row_sum(n) == fib(2 * n)


def test_deriv1_initial_values():
    assert [deriv1_closed(n) for n in (0, 1, 2, 3, 4)] == [0, 1, 4, 14, 46]


def test_deriv1_weighted_sum_row6():
    # direct weighted sum of row 6: 6 + 2*35 + 3*56 + 4*36 + 5*10 + 6*1
    assert 6 + 70 + 168 + 144 + 50 + 6 == 444
    assert deriv1_closed(6) == 444


def test_deriv2_initial_values():
    assert [deriv2_closed(n) for n in (1, 2, 3, 4, 5, 6)] == [0, 2, 14, 68, 282, 1068]


def test_derivatives_match_weighted_sums_to_500(rows500):
    for n in range(1, 501):
        row = rows500[n]
        assert deriv1_closed(n) == sum(k * a for k, a in enumerate(row))
        assert deriv2_closed(n) == sum(k * (k - 1) * a for k, a in enumerate(row))


def test_moment_summary_small_cases():
    s1 = moment_summary(1)
    assert (s1.mu, s1.sigma2) == (Fraction(1), Fraction(0))  # point mass at k = 1
    s2 = moment_summary(2)
    assert (s2.mu, s2.sigma2) == (Fraction(4, 3), Fraction(2, 9))  # from row [0, 2, 1]
    assert moment_summary(4).mu == Fraction(46, 21)


def test_moment_summary_matches_definitional_values_to_500(rows500):
    for n in range(1, 501):
        s = moment_summary(n)
        u = sum(rows500[n])
        v = sum(k * a for k, a in enumerate(rows500[n]))
        w = sum(k * (k - 1) * a for k, a in enumerate(rows500[n]))
        assert (s.u, s.v, s.w) == (u, v, w)
        mu = Fraction(v, u)
        assert s.mu == mu
        assert s.sigma2 == Fraction(w, u) - mu * mu + mu


def test_mean_is_never_integer_for_n_from_2_to_500():
    for n in range(2, 501):
        s = moment_summary(n)
        assert s.mu.denominator != 1
        assert 0 < s.mu < n
        assert s.sigma2 >= 0


def test_mean_rate_has_exact_leading_correction():
    # mu/n - 1/sqrt(5) - 2/(5n) decays like the Fibonacci-ratio error, far
    # below 1e-8 from n = 20 on.
    for n in range(20, 1001, 7):
        s = moment_summary(n)
        assert abs(ratio_to_float(s.mu / n) - INV_SQRT5 - 2.0 / (5.0 * n)) < 1e-8


def test_variance_strictly_increases_to_500():
    prev = moment_summary(2).sigma2
    for n in range(3, 501):
        cur = moment_summary(n).sigma2
        assert cur > prev
        prev = cur


def test_kepler_gap_values():
    assert kepler_gap(1) == (Fraction(1), Fraction(0))
    assert kepler_gap(2) == (Fraction(2, 3), Fraction(1, 9))
    mu_rate, var_rate = kepler_gap(1000)
    assert abs(ratio_to_float(mu_rate) - 0.4472136) < 5e-4
    assert abs(ratio_to_float(var_rate) - 0.1788854) < 5e-4


def test_preconditions():
    with pytest.raises(ValueError):
        row_sum(0)
    with pytest.raises(ValueError):
        moment_summary(0)
    with pytest.raises(ValueError):
        deriv1_closed(-1)
