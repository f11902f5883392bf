"""Bessel-type series: J_n, I_n, Tricomi C_alpha, and the Hermite-based
Bessel function that arises as the limit object of the order-m Laguerre
asymptotics, plus the closed form of the even-index Hermite generating
function.

Every series is summed left to right with incremental term ratios, so no
bare factorial or gamma value larger than the terms themselves is ever
formed.  Truncation follows SeriesControl: several consecutive terms
below rel_tol times the running sum stop the series (single-term stops
would misfire on the exactly-zero odd terms of h-type series); the first
omitted term is reported as the tail bound.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .errors import DomainError, GammaPoleError, NoConvergenceError
from .polynomials import hermite_m_scaled
from .umbral import DEFAULT_CONTROL, SeriesControl

_J_SERIES_LIMIT = 30.0  # beyond this, alternating cancellation swamps double precision


@dataclass(frozen=True)
class SeriesValue:
    """Result of a truncated series: value, terms used, first omitted term."""

    value: float
    terms_used: int
    tail_bound: float


def _sum_ratio_series(first_term: float, ratio, ctl: SeriesControl) -> SeriesValue:
    """Sum term_0 + term_1 + ... with term_(r+1) = term_r * ratio(r)."""
    term = first_term
    total = 0.0
    small_run = 0
    for r in range(ctl.max_terms):
        total += term
        nxt = term * ratio(r)
        if abs(term) <= ctl.rel_tol * abs(total):
            small_run += 1
            if small_run >= ctl.consecutive_small:
                return SeriesValue(total, r + 1, abs(nxt))
        else:
            small_run = 0
        term = nxt
    raise NoConvergenceError(
        f"series did not meet the stop criterion within {ctl.max_terms} terms",
        terms_used=ctl.max_terms,
    )


def bessel_j(n: int, x: float, ctl: SeriesControl = DEFAULT_CONTROL) -> SeriesValue:
    """Cylindrical Bessel J_n(x) by its ascending series.

    J_n(x) = sum_r (-1)^r (x/2)^(n+2r) / (r! (n+r)!), restricted to
    |x| <= 30 where the alternating sum keeps double-precision accuracy.
    """
    if not isinstance(n, int) or n < 0:
        raise ValueError(f"order must be a nonnegative integer, got {n!r}")
    if abs(x) > _J_SERIES_LIMIT:
        raise DomainError(
            f"|x| = {abs(x)} exceeds the series regime |x| <= {_J_SERIES_LIMIT}"
        )
    half = x / 2.0
    first = half ** n / math.factorial(n)
    q = half * half
    return _sum_ratio_series(first, lambda r: -q / ((r + 1) * (n + r + 1)), ctl)


def bessel_i(n: int, x: float, ctl: SeriesControl = DEFAULT_CONTROL) -> SeriesValue:
    """Modified Bessel I_n(x): the J series without alternating signs."""
    if not isinstance(n, int) or n < 0:
        raise ValueError(f"order must be a nonnegative integer, got {n!r}")
    half = x / 2.0
    first = half ** n / math.factorial(n)
    q = half * half
    return _sum_ratio_series(first, lambda r: q / ((r + 1) * (n + r + 1)), ctl)


def tricomi(alpha: float, x: float, ctl: SeriesControl = DEFAULT_CONTROL) -> SeriesValue:
    """Tricomi function C_alpha(x) = sum_r (-x)^r / (r! Gamma(alpha+r+1)).

    Entire in x; for x > 0 it equals x^(-alpha/2) J_alpha(2 sqrt(x)),
    which the tests use as a cross-check.  alpha at a negative integer
    puts a gamma pole inside the series.
    """
    a = float(alpha)
    if a < 0 and a == int(a):
        raise GammaPoleError(f"Tricomi series undefined at negative integer alpha={alpha}")
    first = 1.0 / math.gamma(a + 1.0)
    return _sum_ratio_series(first, lambda r: -x / ((r + 1) * (a + r + 1)), ctl)


def hermite_bessel(
    nu: float, xs: Sequence, ctl: SeriesControl = DEFAULT_CONTROL
) -> SeriesValue:
    """Hermite-based Bessel function with m-variable arguments.

    sum_r H_r^(m)(xs) / (r! Gamma(nu+r+1)), evaluated from the scaled
    coefficients h_r = H_r^(m)/r! so the numerator never overflows.  With
    a single argument it reduces to C_nu(-x); it is the limit object of
    the order-m Laguerre approximations.
    """
    nu_f = float(nu)
    if nu_f < 0 and nu_f == int(nu_f):
        raise GammaPoleError(f"series undefined at negative integer nu={nu}")
    xs = [float(v) for v in xs]
    if not xs:
        raise ValueError("hermite_bessel needs at least one argument")

    coeffs = hermite_m_scaled(xs, ctl.max_terms + 2)
    denom = math.gamma(nu_f + 1.0)  # Gamma(nu+r+1), updated incrementally
    total = 0.0
    small_run = 0
    for r in range(ctl.max_terms):
        term = float(coeffs[r]) / denom
        total += term
        denom *= nu_f + r + 1.0
        if abs(term) <= ctl.rel_tol * abs(total):
            small_run += 1
            if small_run >= ctl.consecutive_small:
                return SeriesValue(total, r + 1, abs(float(coeffs[r + 1]) / denom))
        else:
            small_run = 0
    raise NoConvergenceError(
        f"series did not meet the stop criterion within {ctl.max_terms} terms",
        terms_used=ctl.max_terms,
    )


def even_hermite_gf(x: float, y: float, t: float) -> float:
    """Closed form of sum_n t^n H_(2n)(x,y) / n!.

    Equals exp(t x^2 / (1 - 4 y t)) / sqrt(1 - 4 y t) on 1 - 4yt > 0.
    """
    d = 1.0 - 4.0 * float(y) * float(t)
    if d <= 0.0:
        raise DomainError(f"generating function requires 1 - 4yt > 0, got {d}")
    return math.exp(t * x * x / d) / math.sqrt(d)


def even_hermite_series(
    x: float, y: float, t: float, ctl: SeriesControl = DEFAULT_CONTROL
) -> SeriesValue:
    """Direct summation of sum_n t^n H_(2n)(x,y) / n!.

    Validation counterpart of even_hermite_gf.  Tracks the scaled pair
    A_k = t^k H_(2k)/k!, B_k = t^k H_(2k-1)/k! through the Hermite
    recurrence, so the huge raw H_(2k) values never materialize.
    """
    x, y, t = float(x), float(y), float(t)
    a, b = 1.0, 0.0
    total = 0.0
    small_run = 0
    for k in range(ctl.max_terms):
        total += a
        c = x * a + 4.0 * y * k * b  # t^k H_(2k+1) / k!
        a_next = t / (k + 1) * (x * c + 2.0 * y * (2 * k + 1) * a)
        b_next = t / (k + 1) * c
        if abs(a) <= ctl.rel_tol * abs(total):
            small_run += 1
            if small_run >= ctl.consecutive_small:
                return SeriesValue(total, k + 1, abs(a_next))
        else:
            small_run = 0
        a, b = a_next, b_next
    raise NoConvergenceError(
        f"series did not meet the stop criterion within {ctl.max_terms} terms",
        terms_used=ctl.max_terms,
    )
