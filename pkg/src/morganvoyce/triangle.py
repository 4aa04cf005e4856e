"""Generators for the coefficient triangle A(n, k) = C(n+k-1, 2k-1).

A row is a plain list indexed k = 0..n.  Every row of the integer triangle
has A(n, 0) = 0 (the polynomials have no constant term), A(n, 1) = n, and
A(n, n) = 1; the entries rise to a peak and fall again (log-concave, hence
unimodal).  Three independent generation routes are provided:

* ``row_closed_form``  -- the binomial closed form, entry by entry;
* ``row_three_term``   -- the recurrence Q[n+2] = (2+x) Q[n+1] - Q[n];
* ``row_hereditary``   -- the weighted-history recurrence
  p[n] = x * sum(g(k) * p[n-k], k = 1..n), p[0] = 1, for any arithmetic
  weight function g.  With g(k) = k this reproduces the integer triangle;
  coefficients are exact rationals so one code path serves every g.

``three_term_rows`` and ``hereditary_rows`` return all rows 0..max_n in one
pass; the per-row functions are thin wrappers over them or over ``binom``.
All functions are pure.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, List

from .exact import binom

__all__ = [
    "row_closed_form",
    "row_three_term",
    "three_term_rows",
    "row_hereditary",
    "hereditary_rows",
    "reciprocal_row",
]


def row_closed_form(n: int) -> List[int]:
    """Row n of the triangle from the closed form, coeffs[k] = C(n+k-1, 2k-1).

    The k = 0 entry is C(n-1, -1) = 0, carried explicitly so CDF code can
    index rows uniformly from 0.
    """
    if n < 1:
        raise ValueError(f"row_closed_form requires n >= 1, got {n}")
    return [binom(n + k - 1, 2 * k - 1) for k in range(n + 1)]


def three_term_rows(max_n: int) -> List[List[int]]:
    """Rows 0..max_n via Q[n+2] = (2+x) Q[n+1] - Q[n], Q1 = x, Q2 = x^2 + 2x."""
    if max_n < 0:
        raise ValueError(f"three_term_rows requires max_n >= 0, got {max_n}")
    rows = [[1]]
    if max_n >= 1:
        rows.append([0, 1])
    if max_n >= 2:
        rows.append([0, 2, 1])
    while len(rows) <= max_n:
        q1, q0 = rows[-1], rows[-2]
        out = [0] * (len(q1) + 1)
        for i, c in enumerate(q1):  # (2 + x) * q1
            out[i] += 2 * c
            out[i + 1] += c
        for i, c in enumerate(q0):
            out[i] -= c
        rows.append(out)
    return rows


def row_three_term(n: int) -> List[int]:
    """Row n of the triangle via the three-term recurrence chain."""
    if n < 1:
        raise ValueError(f"row_three_term requires n >= 1, got {n}")
    return three_term_rows(n)[n]


def hereditary_rows(max_n: int, g: Callable[[int], Fraction | int]) -> List[List[Fraction]]:
    """Rows 0..max_n of p[n] = x * sum(g(k) * p[n-k], k = 1..n) with p[0] = 1.

    g is evaluated on 1..max_n once per (n, k) pair; values are coerced to
    Fraction.  Row n has length n + 1 with a leading exact zero.
    """
    if max_n < 0:
        raise ValueError(f"hereditary_rows requires max_n >= 0, got {max_n}")
    rows: List[List[Fraction]] = [[Fraction(1)]]
    for n in range(1, max_n + 1):
        acc = [Fraction(0)] * n
        for k in range(1, n + 1):
            gk = Fraction(g(k))
            for i, c in enumerate(rows[n - k]):
                acc[i] += gk * c
        rows.append([Fraction(0)] + acc)  # multiply by x: shift up one degree
    return rows


def row_hereditary(n: int, g: Callable[[int], Fraction | int]) -> List[Fraction]:
    """Row n of the generic-weight triangle for the arithmetic function g."""
    if n < 0:
        raise ValueError(f"row_hereditary requires n >= 0, got {n}")
    return hereditary_rows(n, g)[n]


def reciprocal_row(n: int) -> List[int]:
    """Coefficients C(2n-k-1, k), k = 0..n, of the degree-reversed row.

    Equals row_closed_form(n) read backwards: entry k here is A(n, n-k), with
    no extra index shift (the k = n entry is C(n-1, n) = 0, matching the
    absent constant term of the original row).
    """
    if n < 1:
        raise ValueError(f"reciprocal_row requires n >= 1, got {n}")
    return [binom(2 * n - k - 1, k) for k in range(n + 1)]
