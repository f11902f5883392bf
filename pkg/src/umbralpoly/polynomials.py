"""Exact evaluators for the polynomial families.

Two-variable Hermite, m-variable Hermite, two-variable Laguerre,
associated Laguerre, and the hybrid family sitting between Laguerre and
Hermite.  All evaluators are polymorphic over the numeric type of the
arguments: Fraction in, Fraction out (the combinatorial coefficients are
exact integers or explicit Fractions), float in, float out.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .errors import GammaPoleError

FAMILY_TAGS = ("Laguerre2", "AssocLaguerre", "Hermite2", "HermiteM", "HybridHL")


@dataclass(frozen=True)
class PolyFamily:
    """Identifies one family instance: tag plus its degree and parameters."""

    tag: str
    n: int
    alpha: Optional[float] = None
    m: Optional[int] = None

    def __post_init__(self):
        if self.tag not in FAMILY_TAGS:
            raise ValueError(f"unknown family tag {self.tag!r}; expected one of {FAMILY_TAGS}")
        if not isinstance(self.n, int) or self.n < 0:
            raise ValueError("degree n must be a nonnegative integer")
        if self.tag == "AssocLaguerre" and self.alpha is None:
            raise ValueError("AssocLaguerre requires alpha")
        if self.tag == "HermiteM" and (self.m is None or self.m < 1):
            raise ValueError("HermiteM requires m >= 1")


def _check_degree(n):
    if not isinstance(n, int) or n < 0:
        raise ValueError(f"degree must be a nonnegative integer, got {n!r}")


def hermite2(n: int, x, y):
    """Two-variable Hermite polynomial H_n(x, y).

    Defined by n! sum_r x^(n-2r) y^r / ((n-2r)! r!); computed here with
    the three-term recurrence H_(k+1) = x H_k + 2 y k H_(k-1), H_0 = 1,
    H_1 = x, which avoids large factorial intermediates and is verified
    against the defining sum (see the rational oracle).
    """
    _check_degree(n)
    if n == 0:
        return 1
    prev, cur = 1, x
    for k in range(1, n):
        prev, cur = cur, x * cur + 2 * y * k * prev
    return cur


def hermite_m(n: int, xs: Sequence):
    """m-variable Hermite polynomial H_n^(m)(x_1, ..., x_m).

    Recursion on the variable count,
    H_n^(m) = n! sum_r x_m^r H_(n-mr)^(m-1) / ((n-mr)! r!),
    with base case H_n^(1)(x_1) = x_1^n.  For m = 2 this is hermite2.
    """
    _check_degree(n)
    xs = tuple(xs)
    if not xs:
        raise ValueError("hermite_m needs at least one variable")

    memo = {}

    def rec(k: int, m: int):
        if m == 1:
            return xs[0] ** k
        key = (k, m)
        if key not in memo:
            total = 0
            for r in range(k // m + 1):
                coeff = Fraction(math.perm(k, m * r), math.factorial(r))
                total = total + coeff * xs[m - 1] ** r * rec(k - m * r, m - 1)
            memo[key] = total
        return memo[key]

    value = rec(n, len(xs))
    if isinstance(value, Fraction) and value.denominator == 1:
        return int(value)
    return value


def hermite_m_scaled(xs: Sequence, count: int) -> list:
    """First ``count`` Taylor coefficients of exp(sum_s x_s t^s).

    Coefficient k equals H_k^(m)(xs) / k!.  This scaled form is the
    numerically stable carrier for the Bessel-type series and the
    order-m approximations: no bare factorials ever appear.
    """
    coeffs = [0] * count
    coeffs[0] = 1
    for j, xj in enumerate(xs, start=1):
        if xj == 0:
            continue
        new = [0] * count
        for k in range(count):
            acc = 0
            power = 1  # xj^r / r!
            r = 0
            while j * r <= k:
                acc = acc + power * coeffs[k - j * r]
                r += 1
                power = power * xj * Fraction(1, r)
            new[k] = acc
        coeffs = new
    return coeffs


def laguerre2(n: int, x, y):
    """Two-variable Laguerre polynomial L_n(x, y).

    Finite Newton sum: sum_s C(n,s) (-1)^s y^(n-s) x^s / s!.
    """
    _check_degree(n)
    total = 0
    for s in range(n + 1):
        coeff = Fraction((-1) ** s * math.comb(n, s), math.factorial(s))
        total = total + coeff * y ** (n - s) * x ** s
    return total


def _is_integral(alpha) -> bool:
    if isinstance(alpha, int):
        return True
    if isinstance(alpha, Fraction):
        return alpha.denominator == 1
    return isinstance(alpha, float) and alpha.is_integer()


def gamma_ratio(a: float, b: float) -> float:
    """Gamma(a)/Gamma(b) as a float, safe against overflow for large positive arguments."""
    for v in (a, b):
        if float(v) <= 0 and float(v) == int(v):
            raise GammaPoleError(f"gamma pole at {v}")
    a, b = float(a), float(b)
    if a > 0 and b > 0 and max(a, b) > 170.0:
        return math.exp(math.lgamma(a) - math.lgamma(b))
    return math.gamma(a) / math.gamma(b)


def assoc_laguerre(n: int, alpha, x, y):
    """Associated Laguerre polynomial L_n^(alpha)(x, y).

    (Gamma(n+alpha+1)/n!) sum_s C(n,s) (-1)^s y^(n-s) x^s / Gamma(s+alpha+1).
    Exact for integer alpha >= 0; alpha = 0 reduces to laguerre2.

    Raises GammaPoleError when alpha is a negative integer (some
    Gamma(s+alpha+1) in the sum, or the prefactor, hits a pole).
    """
    _check_degree(n)
    if _is_integral(alpha):
        a = int(alpha)
        if a < 0:
            raise GammaPoleError(
                f"associated family undefined at negative integer alpha={a}"
            )
        if a == 0:
            return laguerre2(n, x, y)
        prefactor = Fraction(math.factorial(n + a), math.factorial(n))
        total = 0
        for s in range(n + 1):
            coeff = Fraction((-1) ** s * math.comb(n, s), math.factorial(s + a))
            total = total + coeff * y ** (n - s) * x ** s
        return prefactor * total

    alpha = float(alpha)
    prefactor = gamma_ratio(n + alpha + 1.0, n + 1.0)
    total = 0.0
    for s in range(n + 1):
        term = math.comb(n, s) * (-1) ** s * y ** (n - s) * x ** s
        total += term / math.gamma(s + alpha + 1.0)
    return prefactor * total


def hybrid_hl(n: int, x, y):
    """Hybrid polynomial HL_n(x, y) with squared-factorial denominators.

    n! sum_r x^(n-2r) y^r / ((n-2r)! (r!)^2); the integer coefficient is
    C(n,2r) * C(2r,r).  The extra 1/r! relative to hermite2 is what the
    c-type vacuum on the second variable contributes.
    """
    _check_degree(n)
    total = 0
    for r in range(n // 2 + 1):
        coeff = math.comb(n, 2 * r) * math.comb(2 * r, r)
        total = total + coeff * x ** (n - 2 * r) * y ** r
    return total
