"""Large-index approximations of the polynomial families.

Each formula comes from truncating n*ln(1 + u/n) at order m inside an
umbral exponential, which turns the polynomial into a rapidly convergent
series whose coefficients are m-variable Hermite polynomials.  The
operations take the polynomial's actual evaluation point (x, y) and
perform the rescaling themselves: Laguerre-type formulas work with
u = n*x/y, Hermite-type with Y = n^2*y.

Laguerre:   L_n(x,y)  ~ y^n * HC_0(a_1..a_m),  a_s = -n (x/y)^s / s
Associated: extra prefactor Gamma(n+a+1)/n! and order a on the HC series
Hermite:    H_n(x,y)  ~ x^n sum_k H_2k^(m)(a) Y^k / k!
Hybrid:     HL_n(x,y) ~ x^n sum_k H_2k^(m)(a) Y^k / (k!)^2
            with a_s = (-1)^(s-1) / (s n^(s-1) x^s)

m = 1 collapses to the classical Bessel/Gaussian forms; the J0/J2
two-term variant and the closed Gaussian form are alternative
second-order expressions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Tuple, Union

from .bessel import SeriesValue, bessel_j, hermite_bessel
from .errors import DomainError, NoConvergenceError
from .oracle import (
    as_rational,
    exact_assoc_laguerre,
    exact_hermite,
    exact_hybrid,
    exact_laguerre,
)
from .polynomials import PolyFamily, assoc_laguerre, gamma_ratio, hermite_m_scaled
from .umbral import DEFAULT_CONTROL, SeriesControl

_X_FLOOR = 1e-8  # the log expansion divides by x; reject near-singular points

_TAG_ALIASES = {
    "laguerre2": "Laguerre2",
    "assoc_laguerre": "AssocLaguerre",
    "assoclaguerre": "AssocLaguerre",
    "hermite2": "Hermite2",
    "hermite_m": "HermiteM",
    "hermitem": "HermiteM",
    "hybrid_hl": "HybridHL",
    "hybridhl": "HybridHL",
    "hybrid": "HybridHL",
}


def canonical_tag(tag: str) -> str:
    if tag in _TAG_ALIASES.values():
        return tag
    key = tag.lower()
    if key in _TAG_ALIASES:
        return _TAG_ALIASES[key]
    raise ValueError(f"unknown family tag {tag!r}")


@dataclass(frozen=True)
class ApproxReport:
    """One row of an accuracy table: exact vs approximate value."""

    family: PolyFamily
    n: int
    point: Tuple[float, float]
    order_m: int
    exact: float
    approx: float
    relative_error: float
    terms_used: int


def _check_order(n: int, m: int):
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"index n must be a positive integer, got {n!r}")
    if not isinstance(m, int) or m < 1:
        raise ValueError(f"order m must be a positive integer, got {m!r}")


def _laguerre_arguments(n: int, x: float, y: float, m: int) -> list:
    u = x / y
    return [-n * u ** s / s for s in range(1, m + 1)]


def _hermite_arguments(n: int, x: float, m: int) -> list:
    return [(-1) ** (s - 1) / (s * float(n) ** (s - 1) * x ** s) for s in range(1, m + 1)]


def _laguerre_sv(n, x, y, m, ctl) -> SeriesValue:
    _check_order(n, m)
    x, y = float(x), float(y)
    if y == 0.0:
        raise DomainError("Laguerre asymptotics need y != 0 (the formula rescales by x/y)")
    series = hermite_bessel(0, _laguerre_arguments(n, x, y, m), ctl)
    scale = y ** n
    return SeriesValue(scale * series.value, series.terms_used, abs(scale) * series.tail_bound)


def approx_laguerre(
    n: int, x, y, m: int, ctl: SeriesControl = DEFAULT_CONTROL
) -> float:
    """Order-m approximation of L_n(x, y); m=1 is y^n J_0(2 sqrt(nx/y))."""
    return _laguerre_sv(n, x, y, m, ctl).value


def approx_laguerre_j2(n: int, x, y, ctl: SeriesControl = DEFAULT_CONTROL) -> float:
    """Two-Bessel second-order Laguerre form y^n (J_0 - (u/2n) J_2)(2 sqrt(u)).

    u = n*x/y must be nonnegative for the real square root; agrees with
    the order-2 series to O(1/n^2) relative, not digit for digit.
    """
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"index n must be a positive integer, got {n!r}")
    x, y = float(x), float(y)
    if y == 0.0:
        raise DomainError("Laguerre asymptotics need y != 0 (the formula rescales by x/y)")
    u = n * x / y
    if u < 0.0:
        raise DomainError(f"J-form needs u = n*x/y >= 0, got u={u}; use the series form")
    root = 2.0 * math.sqrt(u)
    j0 = bessel_j(0, root, ctl)
    j2 = bessel_j(2, root, ctl)
    return y ** n * (j0.value - u / (2.0 * n) * j2.value)


def _assoc_sv(n, alpha, x, y, m, ctl) -> SeriesValue:
    _check_order(n, m)
    x, y = float(x), float(y)
    if y == 0.0:
        raise DomainError("Laguerre asymptotics need y != 0 (the formula rescales by x/y)")
    alpha = float(alpha)
    prefactor = gamma_ratio(n + alpha + 1.0, n + 1.0)
    series = hermite_bessel(alpha, _laguerre_arguments(n, x, y, m), ctl)
    scale = prefactor * y ** n
    return SeriesValue(scale * series.value, series.terms_used, abs(scale) * series.tail_bound)


def approx_assoc_laguerre(
    n: int, alpha, x, y, m: int, ctl: SeriesControl = DEFAULT_CONTROL
) -> float:
    """Order-m approximation of L_n^(alpha)(x, y); alpha=0 reduces to approx_laguerre."""
    return _assoc_sv(n, alpha, x, y, m, ctl).value


def _hermite_like_sv(n, x, y, m, ctl, squared: bool) -> SeriesValue:
    _check_order(n, m)
    x, y = float(x), float(y)
    if abs(x) < _X_FLOOR:
        raise DomainError(
            f"|x| = {abs(x)} is below {_X_FLOOR}; the expansion divides by x "
            "(exact evaluators remain available)"
        )
    big_y = float(n) * n * y
    coeffs = hermite_m_scaled(_hermite_arguments(n, x, m), 2 * ctl.max_terms + 3)
    scale = x ** n
    total = 0.0
    g = 1.0  # (2k)! Y^k / k!, divided by an extra k! in the squared variant
    small_run = 0
    for k in range(ctl.max_terms):
        term = float(coeffs[2 * k]) * g
        total += term
        # the coefficient/weight split can leave double range long before
        # the mathematical series settles; stop rather than let an inf
        # total swallow every later term and "converge"
        if not math.isfinite(total):
            raise NoConvergenceError(
                f"series left double range after {k + 1} terms", terms_used=k + 1
            )
        g_next = g * big_y * 2.0 * (2 * k + 1)
        if squared:
            g_next /= k + 1
        if abs(term) <= ctl.rel_tol * abs(total):
            small_run += 1
            if small_run >= ctl.consecutive_small:
                tail = abs(scale) * abs(float(coeffs[2 * k + 2]) * g_next)
                return SeriesValue(scale * total, k + 1, tail)
        else:
            small_run = 0
        g = g_next
    raise NoConvergenceError(
        f"series did not meet the stop criterion within {ctl.max_terms} terms",
        terms_used=ctl.max_terms,
    )


def approx_hermite(
    n: int, x, y, m: int, ctl: SeriesControl = DEFAULT_CONTROL
) -> float:
    """Order-m approximation of H_n(x, y); m=1 is x^n exp(n^2 y / x^2)."""
    return _hermite_like_sv(n, x, y, m, ctl, squared=False).value


def approx_hybrid(
    n: int, x, y, m: int, ctl: SeriesControl = DEFAULT_CONTROL
) -> float:
    """Order-m approximation of HL_n(x, y); m=1 is x^n I_0(2 sqrt(n^2 y)/x)."""
    return _hermite_like_sv(n, x, y, m, ctl, squared=True).value


def approx_hermite_closed(n: int, x, y) -> float:
    """Closed Gaussian form sqrt(n) x^(n+1) exp(nY/(nx^2+2Y)) / sqrt(nx^2+2Y).

    Y = n^2 y.  Defined for x > 0 (apply H_n(-x,y) = (-1)^n H_n(x,y) for
    the other branch) and n x^2 + 2Y > 0.  Identical to the order-2
    series wherever both exist, by the even-index generating function.
    """
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"index n must be a positive integer, got {n!r}")
    x, y = float(x), float(y)
    if x <= 0.0:
        raise DomainError("closed form takes x > 0; use the parity relation for x < 0")
    big_y = float(n) * n * y
    d = n * x * x + 2.0 * big_y
    if d <= 0.0:
        raise DomainError(f"closed form needs n*x^2 + 2*n^2*y > 0, got {d}")
    return math.sqrt(n) * x ** (n + 1) * math.exp(n * big_y / d) / math.sqrt(d)


_EXACT_DISPATCH = {
    "Laguerre2": lambda n, x, y, alpha: exact_laguerre(n, x, y),
    "Hermite2": lambda n, x, y, alpha: exact_hermite(n, x, y),
    "HybridHL": lambda n, x, y, alpha: exact_hybrid(n, x, y),
}


def _exact_value(tag: str, n: int, x, y, alpha) -> float:
    if tag == "AssocLaguerre":
        if alpha is None:
            raise ValueError("AssocLaguerre reports require alpha")
        if float(alpha) == int(alpha):
            return float(exact_assoc_laguerre(n, int(alpha), as_rational(x), as_rational(y)))
        # irrational shift: float gamma is the best available ground truth
        return float(assoc_laguerre(n, float(alpha), float(x), float(y)))
    if tag not in _EXACT_DISPATCH:
        raise ValueError(f"no asymptotic approximation defined for family {tag!r}")
    return float(_EXACT_DISPATCH[tag](n, as_rational(x), as_rational(y), alpha))


def make_report(
    family: Union[str, PolyFamily],
    n: int,
    point: Tuple,
    m: int,
    ctl: SeriesControl = DEFAULT_CONTROL,
    alpha=None,
    variant: str = "series",
) -> ApproxReport:
    """Pair an approximation with its oracle value at one grid point.

    variant 'series' runs the order-m formula; 'j2' (Laguerre only) and
    'closed' (Hermite only) select the alternative second-order forms and
    record order_m = 2.
    """
    tag = family.tag if isinstance(family, PolyFamily) else canonical_tag(family)
    if isinstance(family, PolyFamily) and family.alpha is not None and alpha is None:
        alpha = family.alpha
    x, y = point

    exact = _exact_value(tag, n, x, y, alpha)

    if variant == "series":
        if tag == "Laguerre2":
            sv = _laguerre_sv(n, x, y, m, ctl)
        elif tag == "AssocLaguerre":
            sv = _assoc_sv(n, alpha, x, y, m, ctl)
        elif tag == "Hermite2":
            sv = _hermite_like_sv(n, x, y, m, ctl, squared=False)
        elif tag == "HybridHL":
            sv = _hermite_like_sv(n, x, y, m, ctl, squared=True)
        else:
            raise ValueError(f"no asymptotic approximation defined for family {tag!r}")
        approx, terms, order = sv.value, sv.terms_used, m
    elif variant == "j2":
        if tag != "Laguerre2":
            raise ValueError("the J0/J2 form applies to the plain Laguerre family only")
        approx, terms, order = approx_laguerre_j2(n, x, y, ctl), 0, 2
    elif variant == "closed":
        if tag != "Hermite2":
            raise ValueError("the closed Gaussian form applies to the Hermite family only")
        approx, terms, order = approx_hermite_closed(n, x, y), 0, 2
    else:
        raise ValueError(f"unknown variant {variant!r}")

    rel = abs(approx - exact) / abs(exact) if exact != 0 else math.inf
    fam = family if isinstance(family, PolyFamily) else PolyFamily(
        tag, n, alpha=None if alpha is None else float(alpha)
    )
    return ApproxReport(
        family=fam,
        n=n,
        point=(float(x), float(y)),
        order_m=order,
        exact=exact,
        approx=approx,
        relative_error=rel,
        terms_used=terms,
    )
