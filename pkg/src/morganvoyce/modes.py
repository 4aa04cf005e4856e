"""Mode location for the triangle rows and the double-mode Pell solutions.

Row n is unimodal with at most two modes.  Adjacent entries compare as
A(n, m) - A(n, m+1), whose sign is the sign of 5m^2 + 2m - n^2, so the
smallest mode is the least m with 5m^2 + 2m >= n^2; the mode is doubled
(A(n, m) = A(n, m+1)) exactly when 5m^2 + 2m = n^2.  Substituting j = 5m + 1
turns that equation into the Pell-Fermat equation j^2 - 5n^2 = 1, whose
admissible (j = 1 mod 5) solutions are generated by the squared fundamental
matrix [[161, 360], [72, 161]].  All decisions here are exact integer
arithmetic -- no floating-point square roots.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Tuple

from .moments import moment_summary

__all__ = [
    "ModeResult",
    "PellSolution",
    "smallest_mode_index",
    "locate_mode",
    "double_mode_sequence",
    "pell_all_solutions",
]


@dataclass(frozen=True)
class ModeResult:
    """Mode data for one row; darroch_gap = exact distance from mu to the nearer mode."""

    n: int
    smallest_mode: int
    is_double: bool
    darroch_gap: Fraction


@dataclass(frozen=True)
class PellSolution:
    """k-th double-mode row: modes m and m+1 in row n, with j = 5m + 1."""

    k: int
    m: int
    n: int
    j: int


def smallest_mode_index(n: int) -> int:
    """Least m >= 1 with 5m^2 + 2m >= n^2, via exact integer square root.

    Equivalent to the window lower endpoint (sqrt(5n^2+1) - 1)/5 rounded up:
    5m^2 + 2m >= n^2 iff (5m+1)^2 >= 5n^2 + 1.
    """
    if n < 1:
        raise ValueError(f"smallest_mode_index requires n >= 1, got {n}")
    target = 5 * n * n + 1
    s = math.isqrt(target)
    c = s if s * s == target else s + 1  # ceil(sqrt(5n^2+1))
    return (c + 3) // 5  # least m with 5m + 1 >= c


def locate_mode(n: int) -> ModeResult:
    """Smallest mode of row n, double-mode flag, and exact gap to the mean."""
    m = smallest_mode_index(n)
    is_double = 5 * m * m + 2 * m == n * n
    mu = moment_summary(n).mu
    gap = abs(mu - m)
    if is_double:
        gap = min(gap, abs(mu - (m + 1)))
    return ModeResult(n=n, smallest_mode=m, is_double=is_double, darroch_gap=gap)


def double_mode_sequence(count: int) -> List[PellSolution]:
    """First `count` double-mode rows (m_k, n_k), k = 1..count.

    Iterates (5m+1, n) <- [[161, 360], [72, 161]] (5m+1, n) from (1, 0).
    Every solution is verified against both defining equations before being
    returned; a failure raises (it cannot happen unless the matrix is wrong).
    """
    if count < 1:
        raise ValueError(f"double_mode_sequence requires count >= 1, got {count}")
    out: List[PellSolution] = []
    j, n = 1, 0
    for k in range(1, count + 1):
        j, n = 161 * j + 360 * n, 72 * j + 161 * n
        if j % 5 != 1 or j * j - 5 * n * n != 1:
            raise ArithmeticError(f"double-mode iterate {k} violates the Pell equation")
        m = (j - 1) // 5
        if 5 * m * m + 2 * m != n * n:
            raise ArithmeticError(f"double-mode iterate {k} violates 5m^2 + 2m = n^2")
        out.append(PellSolution(k=k, m=m, n=n, j=j))
    return out


def pell_all_solutions(count: int) -> List[Tuple[int, int]]:
    """First `count` non-negative solutions (j, n) of j^2 - 5n^2 = 1.

    Iterates the fundamental matrix [[9, 20], [4, 9]] from (1, 0).  Exactly
    the even-index iterates have j = 1 mod 5 (the ones giving double modes);
    that alternation is checked for every solution produced.
    """
    if count < 1:
        raise ValueError(f"pell_all_solutions requires count >= 1, got {count}")
    out: List[Tuple[int, int]] = []
    j, n = 1, 0
    for i in range(count):
        if j * j - 5 * n * n != 1:
            raise ArithmeticError(f"Pell iterate {i} violates j^2 - 5n^2 = 1")
        if (j % 5 == 1) != (i % 2 == 0):
            raise ArithmeticError(f"Pell iterate {i} breaks the j = 1 mod 5 alternation")
        out.append((j, n))
        j, n = 9 * j + 20 * n, 4 * j + 9 * n
    return out
