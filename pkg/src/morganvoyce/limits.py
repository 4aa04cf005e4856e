"""Distributional limit checks for the normalized triangle rows.

The row polynomial factors over the reals: Q_n(x) / F(2n) is the probability
generating function of a sum of n independent Bernoulli variables (Harper's
method) with factor roots -r_j, r_j = 2 - 2 cos(j pi / n) for j = 1..n-1 plus
one root at the origin.  That factorization yields

* an exact Kolmogorov distance between the normalized row CDF and the normal
  CDF, compared against the Berry-Esseen bound 0.7975 / sigma_n;
* a third-central-moment domination check per Bernoulli factor;
* local limit errors sup |sigma_n A*(n, floor(mu_n + x sigma_n)) - phi(x)|;
* the singularity-analysis growth constants a = 1/sqrt(5) and
  b^2 = 2/(5 sqrt(5)) from the dominant pole r(s) of the bivariate generating
  function, in closed form and by central finite differences.

Exactness lives upstream: rows, row sums, mu and sigma^2 enter as exact
integers/rationals and are converted once per scan.  Everything downstream is
64-bit float.  All functions are pure.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Tuple

import numpy as np

from .exact import fib, binom, ratio_to_float
from .moments import moment_summary
from .triangle import row_closed_form

__all__ = [
    "HarperModel",
    "CltReport",
    "SingularityConstants",
    "LocalLimitRow",
    "normal_cdf",
    "normal_pdf",
    "harper_model",
    "third_moment_bound_check",
    "kolmogorov_distance",
    "local_limit_error",
    "local_limit_row",
    "dominant_pole",
    "singularity_constants",
    "singularity_constants_numeric",
]

SQRT5 = math.sqrt(5.0)
BERRY_ESSEEN_C = 0.7975  # van Beek's admissible universal constant

# Default local-limit scan grid: covers the bulk of the mass at desk scale.
DEFAULT_GRID = (-3.0, 3.0, 601)

_HARPER_TOL = 1e-9  # reconstruction-vs-exact guard inside harper_model


@dataclass(frozen=True, eq=False)
class HarperModel:
    """Bernoulli factorization of one row: success probabilities 1/(1 + r_j)."""

    n: int
    roots: np.ndarray
    success_probs: np.ndarray
    pmf: np.ndarray  # reconstructed distribution of the Bernoulli sum


@dataclass(frozen=True)
class CltReport:
    """Kolmogorov distance vs. the Berry-Esseen bound, plus the local sup error."""

    n: int
    kolmogorov: float
    be_bound: float
    sigma: float
    local_sup_error: float


@dataclass(frozen=True)
class SingularityConstants:
    """Dominant-pole data: r0 = r(0), r1 = r'(0), r2 = r''(0), a = -r1/r0, b2 = a^2 - r2/r0."""

    r0: float
    r1: float
    r2: float
    a: float
    b2: float


@dataclass(frozen=True)
class LocalLimitRow:
    """Pointwise check at the distribution center with asymptotic normalization.

    ratio        = C(n + floor(n/sqrt(5)) - 1, 2 floor(n/sqrt(5)) - 1) / F(2n)
    scaled_error = |2 sqrt(pi) sqrt(n) / 5^(3/4) * ratio - 1| * sqrt(n)
    """

    n: int
    ratio: float
    scaled_error: float


def normal_cdf(x: float) -> float:
    """Standard normal CDF via the complementary error function; error <= 1e-15."""
    return 0.5 * math.erfc(-x / math.sqrt(2.0))


def normal_pdf(x: float) -> float:
    """Standard normal density."""
    return math.exp(-0.5 * x * x) / math.sqrt(2.0 * math.pi)


def _harper_roots(n: int) -> np.ndarray:
    """Factor roots r_j = 2 - 2 cos(j pi / n), j = 1..n-1, plus the origin root."""
    j = np.arange(1, n)
    return np.append(2.0 - 2.0 * np.cos(j * np.pi / n), 0.0)


def _exact_pmf_floats(n: int) -> Tuple[List[int], int, np.ndarray]:
    """(row, F(2n), row/F(2n) as floats) with one exact division per entry."""
    row = row_closed_form(n)
    total = fib(2 * n)
    probs = np.array([ratio_to_float(Fraction(a, total)) for a in row])
    return row, total, probs


def harper_model(n: int) -> HarperModel:
    """Bernoulli factor model of row n, with the reconstructed distribution.

    The pmf is rebuilt by sequential convolution of the factors
    [r/(1+r), 1/(1+r)] (the origin root contributes the forced shift [0, 1])
    and verified against the exact normalized row to 1e-9; a larger deviation
    raises.  Rejects n < 2: a one-point distribution has nothing to factor.
    """
    if n < 2:
        raise ValueError(f"harper_model requires n >= 2, got {n}")
    roots = _harper_roots(n)
    success = 1.0 / (1.0 + roots)
    pmf = np.array([1.0])
    for r, p in zip(roots, success):
        pmf = np.convolve(pmf, [r * p, p])  # (r + x) / (1 + r)
    _, _, exact = _exact_pmf_floats(n)
    err = float(np.max(np.abs(pmf - exact)))
    if err > _HARPER_TOL:
        raise ArithmeticError(f"Harper reconstruction off by {err:.3e} at n = {n}")
    return HarperModel(n=n, roots=roots, success_probs=success, pmf=pmf)


def third_moment_bound_check(n: int, tol: float = 1e-12) -> bool:
    """True iff rho_j = r(1+r^2)/(1+r)^4 <= var_j = r/(1+r)^2 for every factor root."""
    if n < 2:
        raise ValueError(f"third_moment_bound_check requires n >= 2, got {n}")
    for r in _harper_roots(n):
        rho = r * (1.0 + r * r) / (1.0 + r) ** 4
        var = r / (1.0 + r) ** 2
        if rho > var + tol:
            return False
    return True


def _local_sup_error(
    probs: np.ndarray, mu: float, sigma: float, x_lo: float, x_hi: float, steps: int
) -> float:
    """sup over the grid of |sigma * A*(n, floor(mu + x sigma)) - phi(x)|."""
    worst = 0.0
    top = len(probs) - 1
    for x in np.linspace(x_lo, x_hi, steps):
        k = math.floor(mu + x * sigma)
        a = float(probs[k]) if 0 <= k <= top else 0.0
        err = abs(sigma * a - normal_pdf(float(x)))
        if err > worst:
            worst = err
    return worst


def kolmogorov_distance(n: int) -> CltReport:
    """Exact Kolmogorov distance of the normalized row CDF from the normal CDF.

    The CDF is evaluated from exact integer prefix sums (one division by
    F(2n) per jump point, then float).  Because the normal CDF is monotone
    between jumps, scanning both sides of every jump k = 0..n gives the exact
    supremum: D_n = max_k max(|F(k) - Phi(z_k)|, |F(k-1) - Phi(z_k)|) with
    z_k = (k - mu_n)/sigma_n.  The report also carries the Berry-Esseen bound
    0.7975/sigma_n (a violation raises) and the default-grid local sup error.
    Rejects n < 2, where sigma = 0 and the normalization is undefined.
    """
    if n < 2:
        raise ValueError(f"kolmogorov_distance requires n >= 2, got {n}")
    row = row_closed_form(n)
    total = fib(2 * n)
    summary = moment_summary(n)
    mu = ratio_to_float(summary.mu)
    sigma = math.sqrt(ratio_to_float(summary.sigma2))

    acc = 0
    cdf = []
    for a in row:
        acc += a
        cdf.append(ratio_to_float(Fraction(acc, total)))

    d = 0.0
    prev = 0.0
    for k in range(n + 1):
        phi = normal_cdf((k - mu) / sigma)
        d = max(d, abs(cdf[k] - phi), abs(prev - phi))
        prev = cdf[k]

    bound = BERRY_ESSEEN_C / sigma
    if d > bound:
        raise ArithmeticError(f"Kolmogorov distance {d} exceeds Berry-Esseen bound {bound} at n = {n}")
    probs = np.array([ratio_to_float(Fraction(a, total)) for a in row])
    local = _local_sup_error(probs, mu, sigma, *DEFAULT_GRID)
    return CltReport(n=n, kolmogorov=d, be_bound=bound, sigma=sigma, local_sup_error=local)


def local_limit_error(n: int, x_lo: float = -3.0, x_hi: float = 3.0, steps: int = 601) -> float:
    """sup over a uniform grid of |sigma_n A*(n, floor(mu_n + x sigma_n)) - phi(x)|.

    A*(n, k) = A(n, k)/F(2n), taken as 0 outside 0..n.  mu_n and sigma_n are
    the exact-moment values, not their asymptotic approximations.
    """
    if n < 2:
        raise ValueError(f"local_limit_error requires n >= 2, got {n}")
    if not x_lo < x_hi:
        raise ValueError(f"local_limit_error requires x_lo < x_hi, got [{x_lo}, {x_hi}]")
    if steps < 2:
        raise ValueError(f"local_limit_error requires steps >= 2, got {steps}")
    _, _, probs = _exact_pmf_floats(n)
    summary = moment_summary(n)
    mu = ratio_to_float(summary.mu)
    sigma = math.sqrt(ratio_to_float(summary.sigma2))
    return _local_sup_error(probs, mu, sigma, x_lo, x_hi, steps)


def local_limit_row(n: int) -> LocalLimitRow:
    """Center entry of row n under the asymptotic (a, b) normalization.

    Here the row index is b = floor(n/sqrt(5)), computed exactly as
    isqrt(5 n^2) // 5, and the binomial and F(2n) stay exact until the final
    scaled division.  At n = 2, b = 0 makes the binomial C(1, -1) = 0.
    """
    if n < 2:
        raise ValueError(f"local_limit_row requires n >= 2, got {n}")
    b = math.isqrt(5 * n * n) // 5  # floor(n / sqrt(5)), no floats
    ratio = ratio_to_float(Fraction(binom(n + b - 1, 2 * b - 1), fib(2 * n)))
    scaled = abs(2.0 * math.sqrt(math.pi) * math.sqrt(n) * ratio / 5.0**0.75 - 1.0) * math.sqrt(n)
    return LocalLimitRow(n=n, ratio=ratio, scaled_error=scaled)


def dominant_pole(s: float) -> float:
    """r(s) = 1 + e^s/2 - sqrt(e^(2s)/4 + e^s): the generating function's nearest pole."""
    es = math.exp(s)
    return 1.0 + es / 2.0 - math.sqrt(es * es / 4.0 + es)


def singularity_constants() -> SingularityConstants:
    """Growth constants from the closed-form derivatives of the dominant pole.

    r(0) = (3 - sqrt(5))/2, r'(0) = 1/2 - 3/(2 sqrt(5)),
    r''(0) = 1/2 - 11/(10 sqrt(5)); then a = -r'(0)/r(0) and
    b^2 = a^2 - r''(0)/r(0).  The results are checked against 1/sqrt(5) and
    2/(5 sqrt(5)) to 1e-12 before returning.
    """
    r0 = (3.0 - SQRT5) / 2.0
    r1 = 0.5 - 3.0 / (2.0 * SQRT5)
    r2 = 0.5 - 11.0 / (10.0 * SQRT5)
    a = -r1 / r0
    b2 = a * a - r2 / r0
    if abs(a - 1.0 / SQRT5) > 1e-12 or abs(b2 - 2.0 / (5.0 * SQRT5)) > 1e-12:
        raise ArithmeticError("closed-form growth constants drifted from 1/sqrt(5), 2/(5 sqrt(5))")
    return SingularityConstants(r0=r0, r1=r1, r2=r2, a=a, b2=b2)


def singularity_constants_numeric(h: float) -> SingularityConstants:
    """Growth constants with r'(0), r''(0) from central differences at step h.

    Agreement with the closed forms is O(h^2); callers should allow 10 h^2.
    h is restricted to [1e-6, 1e-2]: larger steps lose the quadratic regime,
    smaller ones drown the second difference in rounding noise.
    """
    if not 1e-6 <= h <= 1e-2:
        raise ValueError(f"singularity_constants_numeric requires 1e-6 <= h <= 1e-2, got {h}")
    r0 = dominant_pole(0.0)
    r1 = (dominant_pole(h) - dominant_pole(-h)) / (2.0 * h)
    r2 = (dominant_pole(h) - 2.0 * r0 + dominant_pole(-h)) / (h * h)
    a = -r1 / r0
    return SingularityConstants(r0=r0, r1=r1, r2=r2, a=a, b2=a * a - r2 / r0)
