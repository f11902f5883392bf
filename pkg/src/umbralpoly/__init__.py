"""Two-variable special polynomials through umbral operator calculus.

The package evaluates Hermite, Laguerre and hybrid polynomial families
exactly (rational arithmetic) or in floats, sums their Bessel-type
companion series, and builds the high-degree approximation formulas
those series induce, with recomputable accuracy tables and a CLI.
"""

from .asymptotics import (
    ApproxReport,
    approx_assoc_laguerre,
    approx_hermite,
    approx_hermite_closed,
    approx_hybrid,
    approx_laguerre,
    approx_laguerre_j2,
    canonical_tag,
    make_report,
)
from .bessel import (
    SeriesValue,
    bessel_i,
    bessel_j,
    even_hermite_gf,
    even_hermite_series,
    hermite_bessel,
    tricomi,
)
from .errors import DomainError, GammaPoleError, NoConvergenceError, UmbralError
from .oracle import (
    HighPrecValue,
    Rational,
    as_rational,
    exact_assoc_laguerre,
    exact_hermite,
    exact_hybrid,
    exact_laguerre,
    highprec_series,
)
from .polynomials import (
    FAMILY_TAGS,
    PolyFamily,
    assoc_laguerre,
    gamma_ratio,
    hermite2,
    hermite_m,
    hermite_m_scaled,
    hybrid_hl,
    laguerre2,
)
from .tables import (
    TABLE_IDS,
    RowResult,
    TableResult,
    TableRow,
    TableSpec,
    format_sig2,
    format_value,
    load_table,
    round_to_2_significant,
    run_table,
    truncate_to_2_significant,
    two_sig_match,
)
from .umbral import (
    DEFAULT_CONTROL,
    MomentRule,
    SeriesControl,
    UmbralMonomial,
    UmbralPolynomial,
    c_moment,
    eval_exp,
    eval_poly,
    h_moment,
    monomial,
)

__version__ = "0.1.0"

__all__ = [
    "ApproxReport",
    "DEFAULT_CONTROL",
    "DomainError",
    "FAMILY_TAGS",
    "GammaPoleError",
    "HighPrecValue",
    "MomentRule",
    "NoConvergenceError",
    "PolyFamily",
    "Rational",
    "RowResult",
    "SeriesControl",
    "SeriesValue",
    "TABLE_IDS",
    "TableResult",
    "TableRow",
    "TableSpec",
    "UmbralError",
    "UmbralMonomial",
    "UmbralPolynomial",
    "approx_assoc_laguerre",
    "approx_hermite",
    "approx_hermite_closed",
    "approx_hybrid",
    "approx_laguerre",
    "approx_laguerre_j2",
    "as_rational",
    "assoc_laguerre",
    "bessel_i",
    "bessel_j",
    "c_moment",
    "canonical_tag",
    "eval_exp",
    "eval_poly",
    "even_hermite_gf",
    "even_hermite_series",
    "exact_assoc_laguerre",
    "exact_hermite",
    "exact_hybrid",
    "exact_laguerre",
    "format_sig2",
    "format_value",
    "gamma_ratio",
    "h_moment",
    "hermite2",
    "hermite_bessel",
    "hermite_m",
    "hermite_m_scaled",
    "highprec_series",
    "hybrid_hl",
    "laguerre2",
    "load_table",
    "make_report",
    "monomial",
    "round_to_2_significant",
    "run_table",
    "tricomi",
    "truncate_to_2_significant",
    "two_sig_match",
]
