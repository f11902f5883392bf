"""Ground-truth arithmetic: exact rational evaluation of the polynomial
families and extended-precision tail-bounded sums for the transcendental
series.

The polynomial families have rational coefficients, so with rational
arguments their values are plain fractions; Python's Fraction already
carries arbitrary-size integers (Table-scale inputs need factorials of
70 and beyond, so machine words are not an option).  The transcendental
references use mpmath with a working precision driven by the requested
tolerance.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

import mpmath as mp

from .errors import GammaPoleError, NoConvergenceError
from .polynomials import laguerre2

Rational = Fraction

_RationalLike = Union[int, str, float, Fraction]


def as_rational(value: _RationalLike) -> Fraction:
    """Coerce to an exact Fraction.

    Strings accept 'a/b' and plain integers; floats convert exactly
    (binary value, not decimal appearance), which is what reproducible
    ground truth at a float evaluation point requires.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, str)):
        return Fraction(value)
    if isinstance(value, float):
        return Fraction(value)
    raise TypeError(f"cannot interpret {value!r} as a rational number")


def exact_laguerre(n: int, x: _RationalLike, y: _RationalLike) -> Fraction:
    """L_n(x, y) as an exact fraction via the defining Newton sum."""
    value = laguerre2(n, as_rational(x), as_rational(y))
    return Fraction(value)


def exact_hermite(n: int, x: _RationalLike, y: _RationalLike) -> Fraction:
    """H_n(x, y) as an exact fraction via the defining factorial sum.

    Deliberately not the recurrence: this is the independent route the
    recurrence evaluator is checked against.
    """
    if not isinstance(n, int) or n < 0:
        raise ValueError(f"degree must be a nonnegative integer, got {n!r}")
    x, y = as_rational(x), as_rational(y)
    total = Fraction(0)
    for r in range(n // 2 + 1):
        coeff = math.comb(n, 2 * r) * math.perm(2 * r, r)  # n! / ((n-2r)! r!)
        total += coeff * x ** (n - 2 * r) * y ** r
    return total


def exact_hybrid(n: int, x: _RationalLike, y: _RationalLike) -> Fraction:
    """HL_n(x, y) as an exact fraction ((r!)^2 denominators)."""
    if not isinstance(n, int) or n < 0:
        raise ValueError(f"degree must be a nonnegative integer, got {n!r}")
    x, y = as_rational(x), as_rational(y)
    total = Fraction(0)
    for r in range(n // 2 + 1):
        coeff = math.comb(n, 2 * r) * math.comb(2 * r, r)
        total += coeff * x ** (n - 2 * r) * y ** r
    return total


def exact_assoc_laguerre(n: int, alpha: int, x: _RationalLike, y: _RationalLike) -> Fraction:
    """L_n^(alpha)(x, y) as an exact fraction, integer alpha >= 0 only."""
    if not isinstance(n, int) or n < 0:
        raise ValueError(f"degree must be a nonnegative integer, got {n!r}")
    if not float(alpha) == int(alpha):
        raise ValueError("exact associated evaluation requires integer alpha")
    a = int(alpha)
    if a < 0:
        raise GammaPoleError(f"associated family undefined at negative integer alpha={a}")
    x, y = as_rational(x), as_rational(y)
    prefactor = Fraction(math.factorial(n + a), math.factorial(n))
    total = Fraction(0)
    for s in range(n + 1):
        coeff = Fraction((-1) ** s * math.comb(n, s), math.factorial(s + a))
        total += coeff * y ** (n - s) * x ** s
    return prefactor * total


@dataclass(frozen=True)
class HighPrecValue:
    """Extended-precision series value with its truncation certificate."""

    value: mp.mpf
    terms_used: int
    tail_bound: mp.mpf


_MIN_TARGET = 1e-25
_HP_MAX_TERMS = 5000


def highprec_series(series_id: str, args: Sequence, target_rel: float = 1e-20) -> HighPrecValue:
    """Extended-precision reference sum for the package's series.

    series_id is one of 'bessel_j', 'bessel_i', 'tricomi',
    'hermite_bessel' with args matching the float evaluator's signature
    (order/parameter first, then argument(s)).  The returned tail bound
    (magnitude of the first omitted term) certifies relative error at or
    below target_rel.
    """
    if target_rel < _MIN_TARGET:
        raise ValueError(f"target_rel below the supported floor {_MIN_TARGET}")
    dps = max(30, int(-math.log10(target_rel)) + 15)
    with mp.workdps(dps):
        if series_id == "bessel_j":
            n, x = args
            value = _hp_ratio_series(
                (mp.mpf(x) / 2) ** n / mp.factorial(n),
                lambda r, q=-((mp.mpf(x) / 2) ** 2): q / ((r + 1) * (n + r + 1)),
                target_rel,
            )
        elif series_id == "bessel_i":
            n, x = args
            value = _hp_ratio_series(
                (mp.mpf(x) / 2) ** n / mp.factorial(n),
                lambda r, q=(mp.mpf(x) / 2) ** 2: q / ((r + 1) * (n + r + 1)),
                target_rel,
            )
        elif series_id == "tricomi":
            alpha, x = args
            a = mp.mpf(alpha)
            if a < 0 and a == int(a):
                raise GammaPoleError(f"Tricomi series undefined at negative integer alpha={alpha}")
            value = _hp_ratio_series(
                1 / mp.gamma(a + 1),
                lambda r: -mp.mpf(x) / ((r + 1) * (a + r + 1)),
                target_rel,
            )
        elif series_id == "hermite_bessel":
            nu, xs = args
            value = _hp_hermite_bessel(mp.mpf(nu), [mp.mpf(v) for v in xs], target_rel)
        else:
            raise ValueError(f"unknown series id {series_id!r}")
        return value


def _hp_ratio_series(first_term, ratio, target_rel: float) -> HighPrecValue:
    term = first_term
    total = mp.mpf(0)
    small_run = 0
    for r in range(_HP_MAX_TERMS):
        total += term
        nxt = term * ratio(r)
        if abs(term) <= mp.mpf(target_rel) * abs(total):
            small_run += 1
            if small_run >= 3:
                return HighPrecValue(total, r + 1, abs(nxt))
        else:
            small_run = 0
        term = nxt
    raise NoConvergenceError(
        f"reference series did not converge within {_HP_MAX_TERMS} terms",
        terms_used=_HP_MAX_TERMS,
    )


def _hp_hermite_bessel(nu, xs, target_rel: float) -> HighPrecValue:
    if nu < 0 and nu == int(nu):
        raise GammaPoleError(f"series undefined at negative integer nu={nu}")
    max_terms = 800
    coeffs = _hp_scaled_coeffs(xs, max_terms + 2)
    denom = mp.gamma(nu + 1)
    total = mp.mpf(0)
    small_run = 0
    for r in range(max_terms):
        term = coeffs[r] / denom
        total += term
        denom *= nu + r + 1
        if abs(term) <= mp.mpf(target_rel) * abs(total):
            small_run += 1
            if small_run >= 3:
                return HighPrecValue(total, r + 1, abs(coeffs[r + 1] / denom))
        else:
            small_run = 0
    raise NoConvergenceError(
        f"reference series did not converge within {max_terms} terms",
        terms_used=max_terms,
    )


def _hp_scaled_coeffs(xs, count: int):
    coeffs = [mp.mpf(0)] * count
    coeffs[0] = mp.mpf(1)
    for j, xj in enumerate(xs, start=1):
        if xj == 0:
            continue
        new = [mp.mpf(0)] * count
        for k in range(count):
            acc = mp.mpf(0)
            power = mp.mpf(1)
            r = 0
            while j * r <= k:
                acc += power * coeffs[k - j * r]
                r += 1
                power = power * xj / r
            new[k] = acc
        coeffs = new
    return coeffs
