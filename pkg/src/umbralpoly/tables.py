"""Reference accuracy tables: loading, recomputation, and verdicts.

The expected numbers live in packaged JSON files (data, not code); this
module recomputes every row and compares.  Value columns carry explicit
absolute or relative tolerances; recorded relative errors are matched to
two significant digits, accepting either rounding or truncation since
recorded digits mix both conventions.  Table 5 is special: its record
omits the index n, so the file documents a reconstructed configuration
and the verdict checks only the error-decay pattern across orders.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources
from typing import Optional, Tuple

from .asymptotics import _exact_value, make_report
from .umbral import DEFAULT_CONTROL, SeriesControl

TABLE_IDS = (1, 2, 3, 4, 5)

_PATTERN_MIN_SPAN = 100.0  # two orders of magnitude across the order sweep


def round_to_2_significant(v: float) -> float:
    return _sig2(v, truncate=False)


def truncate_to_2_significant(v: float) -> float:
    return _sig2(v, truncate=True)


def _sig2(v: float, truncate: bool) -> float:
    if v == 0:
        return 0.0
    exp = math.floor(math.log10(abs(v)))
    scale = 10.0 ** (exp - 1)
    mant = abs(v) / scale
    # the tiny bump keeps an exactly-representable 88.0 from truncating to 87
    mant = math.floor(mant + 1e-9) if truncate else round(mant)
    return math.copysign(mant * scale, v)


def two_sig_match(computed: float, recorded: float) -> bool:
    """Recorded two-digit figures match either the rounded or truncated computation."""
    return math.isclose(
        round_to_2_significant(computed), recorded, rel_tol=1e-6
    ) or math.isclose(truncate_to_2_significant(computed), recorded, rel_tol=1e-6)


def format_sig2(v: float) -> str:
    if v == 0:
        return "0"
    if math.isinf(v):
        return "inf"
    mant, exp = f"{v:.1e}".split("e")
    return f"{mant}e{int(exp)}"


def format_value(v: float, fmt: str) -> str:
    out = f"{v:{fmt}}"
    if "e" in out:
        mant, exp = out.split("e")
        out = f"{mant}e{int(exp)}"
    return out


@dataclass(frozen=True)
class TableRow:
    label: str
    selector: str  # exact | series | j2 | closed
    m: Optional[int] = None
    expected_value: Optional[float] = None
    value_tol: Optional[Tuple[str, float]] = None
    expected_rel_error: Optional[float] = None
    note: Optional[str] = None


@dataclass(frozen=True)
class TableSpec:
    table_id: int
    title: str
    family: str
    n: int
    x: Fraction
    y: Fraction
    mode: str  # rows | pattern
    value_format: str
    note: str
    rows: Tuple[TableRow, ...]


@dataclass(frozen=True)
class RowResult:
    row: TableRow
    computed: float
    rel_error: Optional[float]
    terms_used: int
    value_ok: Optional[bool]
    error_ok: Optional[bool]

    @property
    def ok(self) -> bool:
        return (self.value_ok is not False) and (self.error_ok is not False)


@dataclass(frozen=True)
class TableResult:
    spec: TableSpec
    rows: Tuple[RowResult, ...]
    pattern_ok: Optional[bool]
    passed: bool

    @property
    def offending(self) -> Tuple[str, ...]:
        return tuple(r.row.label for r in self.rows if not r.ok)


def load_table(table_id: int) -> TableSpec:
    if table_id not in TABLE_IDS:
        raise ValueError(f"table id must be one of {TABLE_IDS}, got {table_id!r}")
    payload = json.loads(
        resources.files("umbralpoly")
        .joinpath(f"data/tables/table{table_id}.json")
        .read_text(encoding="utf-8")
    )
    rows = []
    for raw in payload["rows"]:
        tol = raw.get("value_tol")
        rows.append(
            TableRow(
                label=raw["label"],
                selector=raw["selector"],
                m=raw.get("m"),
                expected_value=raw.get("expected_value"),
                value_tol=None if tol is None else (tol["kind"], float(tol["tol"])),
                expected_rel_error=raw.get("expected_rel_error"),
                note=raw.get("note"),
            )
        )
    return TableSpec(
        table_id=payload["table_id"],
        title=payload["title"],
        family=payload["family"],
        n=payload["n"],
        x=Fraction(payload["x"]),
        y=Fraction(payload["y"]),
        mode=payload["mode"],
        value_format=payload["value_format"],
        note=payload["note"],
        rows=tuple(rows),
    )


def _value_within(computed: float, expected: float, tol: Tuple[str, float]) -> bool:
    kind, bound = tol
    if kind == "abs":
        return abs(computed - expected) <= bound
    if kind == "rel":
        return abs(computed - expected) <= bound * abs(expected)
    raise ValueError(f"unknown tolerance kind {kind!r}")


def run_table(table_id: int, ctl: SeriesControl = DEFAULT_CONTROL) -> TableResult:
    """Recompute one reference table and compare it row by row."""
    spec = load_table(table_id)
    point = (spec.x, spec.y)
    results = []
    for row in spec.rows:
        if row.selector == "exact":
            computed = _exact_value(spec.family, spec.n, spec.x, spec.y, None)
            rel_error, terms = None, 0
        else:
            report = make_report(
                spec.family,
                spec.n,
                point,
                m=row.m if row.m is not None else 1,
                ctl=ctl,
                variant=row.selector if row.selector in ("j2", "closed") else "series",
            )
            computed = report.approx
            rel_error = report.relative_error
            terms = report.terms_used
        value_ok = None
        if row.expected_value is not None and row.value_tol is not None:
            value_ok = _value_within(computed, row.expected_value, row.value_tol)
        error_ok = None
        if row.expected_rel_error is not None and rel_error is not None:
            error_ok = two_sig_match(rel_error, row.expected_rel_error)
        results.append(
            RowResult(
                row=row,
                computed=computed,
                rel_error=rel_error,
                terms_used=terms,
                value_ok=value_ok,
                error_ok=error_ok,
            )
        )

    if spec.mode == "pattern":
        errs = [r.rel_error for r in results if r.rel_error is not None]
        decreasing = all(a > b for a, b in zip(errs, errs[1:]))
        span_ok = bool(errs) and errs[-1] > 0 and errs[0] / errs[-1] >= _PATTERN_MIN_SPAN
        pattern_ok = decreasing and span_ok
        passed = pattern_ok
    else:
        pattern_ok = None
        passed = all(r.ok for r in results)

    return TableResult(spec=spec, rows=tuple(results), pattern_ok=pattern_ok, passed=passed)
