"""Umbral monomials, polynomials, and the vacuum moment functionals.

Everything in this package ultimately reduces to evaluating polynomials
(or exponentials of polynomials) in two formal symbols, written ``c``
and ``h``, against a "vacuum": a linear functional that replaces each
monomial c^mu h^r with a numeric moment.  The c-symbol carries inverse
gamma-function moments, c^mu -> 1/Gamma(mu+1); the h-symbol carries the
even Gaussian moments h^(2k) -> y^k (2k)!/k! and kills odd powers.  The
two act independently on product terms, so a single tensor rule covers
the pure cases as well.

Arithmetic here is deliberately polymorphic: with Fraction coefficients
and integer exponents every moment is rational and ``eval_poly`` returns
an exact Fraction, which the oracle-backed tests rely on.  Float inputs
flow through unchanged.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Union

from .errors import GammaPoleError, NoConvergenceError

Real = Union[int, float, Fraction]

_MERGE_TOL = 1e-12  # absolute tolerance for merging non-rational exponents


def _is_rational(v) -> bool:
    return isinstance(v, (int, Fraction))


def _is_negative_integer(v) -> bool:
    if _is_rational(v):
        f = Fraction(v)
        return f.denominator == 1 and f < 0
    return float(v) < 0 and float(v) == int(v)


def c_moment(mu: Real) -> Real:
    """Moment of the c-symbol: c^mu -> 1/Gamma(mu+1).

    Exact Fraction for nonnegative integer ``mu`` given as int/Fraction,
    float otherwise.  Accurate to better than 1e-13 relative on
    [-0.5, 50] (delegated to math.gamma).

    Raises GammaPoleError for mu in {-1, -2, ...}.
    """
    if _is_negative_integer(mu):
        raise GammaPoleError(f"c-moment undefined at negative integer exponent mu={mu}")
    if _is_rational(mu):
        f = Fraction(mu)
        if f.denominator == 1 and f >= 0:
            return Fraction(1, math.factorial(int(f)))
        mu = float(mu)
    return 1.0 / math.gamma(mu + 1.0)


def h_moment(r: int, y: Real) -> Real:
    """Moment of the h-symbol with parameter y.

    Zero for odd r; for r = 2k returns y^k (2k)!/k!, exactly (the
    combinatorial factor is an integer, so Fraction y stays exact).
    """
    if not isinstance(r, int) or r < 0:
        raise ValueError(f"h exponent must be a nonnegative integer, got {r!r}")
    if r % 2 == 1:
        return 0
    k = r // 2
    if k == 0:
        return 1
    return y ** k * math.perm(2 * k, k)


@dataclass(frozen=True)
class UmbralMonomial:
    """A single term: coefficient * c^c_exponent * h^h_exponent.

    c_exponent may be fractional (alpha shifts, half-integer powers) but
    must be >= 0; h_exponent is a nonnegative integer because the h
    vacuum is only defined on integer powers.
    """

    coefficient: Real
    c_exponent: Real = 0
    h_exponent: int = 0

    def __post_init__(self):
        if float(self.c_exponent) < 0:
            raise ValueError(f"c exponent must be >= 0, got {self.c_exponent}")
        if not isinstance(self.h_exponent, int) or self.h_exponent < 0:
            raise ValueError(f"h exponent must be a nonnegative integer, got {self.h_exponent}")

    def __mul__(self, other: "UmbralMonomial") -> "UmbralMonomial":
        if not isinstance(other, UmbralMonomial):
            return NotImplemented
        return UmbralMonomial(
            self.coefficient * other.coefficient,
            _add_exponents(self.c_exponent, other.c_exponent),
            self.h_exponent + other.h_exponent,
        )

    def scaled(self, factor: Real) -> "UmbralMonomial":
        return UmbralMonomial(self.coefficient * factor, self.c_exponent, self.h_exponent)


def _add_exponents(a: Real, b: Real) -> Real:
    if _is_rational(a) and _is_rational(b):
        s = Fraction(a) + Fraction(b)
        return int(s) if s.denominator == 1 else s
    return float(a) + float(b)


def _exponents_equal(a: Real, b: Real) -> bool:
    if _is_rational(a) and _is_rational(b):
        return Fraction(a) == Fraction(b)
    return abs(float(a) - float(b)) <= _MERGE_TOL


@dataclass(frozen=True)
class UmbralPolynomial:
    """Finite sum of UmbralMonomial terms, kept in canonical form.

    Canonical form: terms sorted by (c_exponent, h_exponent), no two
    terms sharing an exponent pair, no zero coefficients.  Rational
    exponents merge by exact equality, others within 1e-12.
    """

    terms: tuple = ()

    @staticmethod
    def from_terms(terms: Iterable[UmbralMonomial]) -> "UmbralPolynomial":
        ordered = sorted(terms, key=lambda t: (float(t.c_exponent), t.h_exponent))
        merged: list[UmbralMonomial] = []
        for term in ordered:
            if (
                merged
                and merged[-1].h_exponent == term.h_exponent
                and _exponents_equal(merged[-1].c_exponent, term.c_exponent)
            ):
                prev = merged.pop()
                term = UmbralMonomial(
                    prev.coefficient + term.coefficient, prev.c_exponent, prev.h_exponent
                )
            merged.append(term)
        return UmbralPolynomial(tuple(t for t in merged if t.coefficient != 0))

    @staticmethod
    def zero() -> "UmbralPolynomial":
        return UmbralPolynomial(())

    @staticmethod
    def one() -> "UmbralPolynomial":
        return monomial(1)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def constant_term(self) -> Real:
        for t in self.terms:
            if t.h_exponent == 0 and float(t.c_exponent) == 0.0:
                return t.coefficient
        return 0

    def __add__(self, other: "UmbralPolynomial") -> "UmbralPolynomial":
        if not isinstance(other, UmbralPolynomial):
            return NotImplemented
        return UmbralPolynomial.from_terms(self.terms + other.terms)

    def __sub__(self, other: "UmbralPolynomial") -> "UmbralPolynomial":
        return self + other.scaled(-1)

    def __mul__(self, other):
        if isinstance(other, UmbralPolynomial):
            return UmbralPolynomial.from_terms(
                a * b for a in self.terms for b in other.terms
            )
        return self.scaled(other)

    def __rmul__(self, other):
        return self.scaled(other)

    def __pow__(self, k: int) -> "UmbralPolynomial":
        if not isinstance(k, int) or k < 0:
            raise ValueError("polynomial powers must be nonnegative integers")
        out = UmbralPolynomial.one()
        for _ in range(k):
            out = out * self
        return out

    def scaled(self, factor: Real) -> "UmbralPolynomial":
        if factor == 0:
            return UmbralPolynomial.zero()
        return UmbralPolynomial(tuple(t.scaled(factor) for t in self.terms))

    def with_float_coefficients(self) -> "UmbralPolynomial":
        return UmbralPolynomial(
            tuple(
                UmbralMonomial(float(t.coefficient), t.c_exponent, t.h_exponent)
                for t in self.terms
            )
        )


def monomial(coefficient: Real, c_exponent: Real = 0, h_exponent: int = 0) -> UmbralPolynomial:
    """Single-term polynomial; the building block for umbral expressions."""
    if coefficient == 0:
        return UmbralPolynomial.zero()
    return UmbralPolynomial((UmbralMonomial(coefficient, c_exponent, h_exponent),))


@dataclass(frozen=True)
class MomentRule:
    """Vacuum functional: maps monomial exponents to moments.

    kind 'c' admits only pure c-terms, kind 'h' only pure h-terms with
    parameter ``h_parameter``; kind 'tensor' evaluates both factors
    independently (the pure rules are the tensor rule with the other
    exponent fixed at zero).
    """

    kind: str = "c"
    h_parameter: Real = 0

    _KINDS = ("c", "h", "tensor")

    def __post_init__(self):
        if self.kind not in self._KINDS:
            raise ValueError(f"unknown moment rule kind {self.kind!r}")

    @staticmethod
    def c() -> "MomentRule":
        return MomentRule("c")

    @staticmethod
    def h(y: Real) -> "MomentRule":
        return MomentRule("h", y)

    @staticmethod
    def tensor(y: Real) -> "MomentRule":
        return MomentRule("tensor", y)

    def moment(self, term: UmbralMonomial) -> Real:
        if self.kind == "c" and term.h_exponent != 0:
            raise ValueError("pure-c rule cannot evaluate h exponents; use MomentRule.tensor")
        if self.kind == "h" and float(term.c_exponent) != 0.0:
            raise ValueError("pure-h rule cannot evaluate c exponents; use MomentRule.tensor")
        out = term.coefficient
        if term.h_exponent != 0:
            # apply the h factor first: an odd exponent kills the term
            # outright, which both saves a gamma call and keeps rational
            # terms exact when the c factor would be irrational
            hm = h_moment(term.h_exponent, self.h_parameter)
            if hm == 0:
                return 0
            out = out * hm
        if float(term.c_exponent) != 0.0:
            out = out * c_moment(term.c_exponent)
        return out


@dataclass(frozen=True)
class SeriesControl:
    """Truncation policy for infinite series.

    A series stops once ``consecutive_small`` successive terms each stay
    below rel_tol * |partial sum|; requiring several small terms in a row
    guards against the exactly-zero odd terms of h-symbol series ending
    the sum prematurely.  Hitting max_terms first raises
    NoConvergenceError.
    """

    rel_tol: float = 1e-15
    consecutive_small: int = 3
    max_terms: int = 200

    def __post_init__(self):
        if not self.rel_tol > 0:
            raise ValueError("rel_tol must be positive")
        if self.max_terms < 1:
            raise ValueError("max_terms must be at least 1")
        if self.consecutive_small < 1:
            raise ValueError("consecutive_small must be at least 1")


DEFAULT_CONTROL = SeriesControl()


def eval_poly(p: UmbralPolynomial, rule: MomentRule) -> Real:
    """Evaluate a canonical umbral polynomial against the vacuum.

    Linear extension of the moment rule: sum over terms of
    coefficient * c_moment(c_exponent) * h_moment(h_exponent, y).
    Exact (Fraction) when every ingredient is rational.
    """
    total = 0
    for term in p.terms:
        total = total + rule.moment(term)
    return total


def eval_exp(
    p: UmbralPolynomial,
    rule: MomentRule,
    ctl: SeriesControl = DEFAULT_CONTROL,
    prefix: UmbralPolynomial | None = None,
) -> float:
    """Evaluate e^p (optionally prefix * e^p) against the vacuum.

    Expands e^p = sum_k p^k / k! term by term, applies the moment rule to
    each power, and truncates per ``ctl``.  ``p`` must have zero constant
    term (factor constants out first).  ``prefix`` multiplies every power,
    which is how expressions such as c^alpha e^p phi_0 are evaluated.

    Arithmetic stays rational as long as the inputs are rational, which
    keeps heavily cancelling alternating sums accurate; the return value
    is always a float.
    """
    if p.constant_term() != 0:
        raise ValueError("e^p expansion requires a zero constant term; factor it out")
    power = UmbralPolynomial.one() if prefix is None else prefix

    total = 0
    small_run = 0
    for k in range(ctl.max_terms):
        term = eval_poly(power, rule)
        total = total + term
        if abs(float(term)) <= ctl.rel_tol * abs(float(total)):
            small_run += 1
            if small_run >= ctl.consecutive_small:
                return float(total)
        else:
            small_run = 0
        power = (power * p).scaled(Fraction(1, k + 1))
    raise NoConvergenceError(
        f"e^p series did not satisfy the stop criterion within {ctl.max_terms} terms",
        terms_used=ctl.max_terms,
    )
