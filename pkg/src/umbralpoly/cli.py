"""Command-line harness.

Subcommands: eval (single values), approx (approximation reports),
table (recompute a bundled reference table and verdict it), sweep
(grids of approximation reports in csv/json/markdown).

Number arguments accept decimals or exact fractions.  Fractions and
plain integers route through the exact rational evaluators; decimals
route through the float path.  Shared flags (--format, --full, --tol,
--max-terms, --out) are accepted by every subcommand, placed after the
subcommand name.

Exit codes: 0 success, 1 table comparison failure, 2 usage or parse
error, 3 domain or numeric error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from fractions import Fraction

from . import bessel, oracle, polynomials
from .asymptotics import canonical_tag, make_report
from .errors import DomainError, GammaPoleError, NoConvergenceError, UmbralError
from .tables import TABLE_IDS, format_sig2, format_value, run_table
from .umbral import SeriesControl

_EVAL_FAMILIES = (
    "laguerre2",
    "assoc_laguerre",
    "hermite2",
    "hermite_m",
    "hybrid_hl",
    "besselj",
    "besseli",
    "tricomi",
    "hermite_bessel",
    "even_gf",
)

_APPROX_FAMILIES = ("laguerre2", "assoc_laguerre", "hermite2", "hybrid_hl")


class _UsageError(Exception):
    """Missing or inconsistent arguments; maps to exit code 2."""


def parse_number(text: str):
    """Decimal or fraction literal.  '1/3' and '2' stay exact; '0.5' is a float."""
    s = text.strip()
    try:
        if "/" in s:
            return Fraction(s)
        try:
            return Fraction(int(s))
        except ValueError:
            return float(s)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(
            f"expected a decimal or a fraction like 3/7, got {text!r}"
        ) from None


def parse_number_list(text: str):
    items = [p for p in text.split(",") if p.strip()]
    if not items:
        raise argparse.ArgumentTypeError("expected a nonempty comma-separated list")
    return tuple(parse_number(p) for p in items)


def parse_int_list(text: str):
    """Comma-separated ints with range sugar: '1..6', '8..64*2', '0..10+2'."""
    out = []
    for chunk in text.split(","):
        chunk = chunk.strip()
        if not chunk:
            continue
        if ".." in chunk:
            lo_s, _, rest = chunk.partition("..")
            step_mul = step_add = None
            if "*" in rest:
                hi_s, _, k = rest.partition("*")
                step_mul = int(k)
            elif "+" in rest:
                hi_s, _, k = rest.partition("+")
                step_add = int(k)
            else:
                hi_s, step_add = rest, 1
            try:
                lo, hi = int(lo_s), int(hi_s)
            except ValueError:
                raise argparse.ArgumentTypeError(f"bad range {chunk!r}") from None
            if step_mul is not None:
                if step_mul < 2 or lo <= 0:
                    raise argparse.ArgumentTypeError(
                        f"geometric range needs positive start and factor >= 2: {chunk!r}"
                    )
                v = lo
                while v <= hi:
                    out.append(v)
                    v *= step_mul
            else:
                if step_add < 1:
                    raise argparse.ArgumentTypeError(f"step must be positive: {chunk!r}")
                out.extend(range(lo, hi + 1, step_add))
        else:
            try:
                out.append(int(chunk))
            except ValueError:
                raise argparse.ArgumentTypeError(f"bad integer {chunk!r}") from None
    if not out:
        raise argparse.ArgumentTypeError("range is empty")
    return tuple(out)


def _is_exact(v) -> bool:
    return isinstance(v, (Fraction, int))


def display_number(value, full: bool) -> str:
    """Default display trims to 7 decimals; --full keeps everything."""
    if isinstance(value, Fraction):
        if full or value.denominator == 1:
            return str(value)
        value = float(value)
    elif isinstance(value, int):
        return str(value)
    v = float(value)
    if full:
        return repr(v)
    if v == 0:
        return "0"
    if not math.isfinite(v):
        return repr(v)
    if abs(v) >= 1e10 or abs(v) < 1e-6:
        mant, exp = f"{v:.7e}".split("e")
        mant = mant.rstrip("0").rstrip(".")
        return f"{mant}e{int(exp)}"
    out = f"{v:.7f}".rstrip("0").rstrip(".")
    return "0" if out in ("-0", "") else out


def _display_error(v, full: bool) -> str:
    if v is None:
        return ""
    return repr(float(v)) if full else format_sig2(float(v))


def _control(args) -> SeriesControl:
    return SeriesControl(rel_tol=args.tol, max_terms=args.max_terms)


def _emit(text: str, args) -> None:
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# ---------------------------------------------------------------- eval

def _eval_value(args):
    fam = args.family
    ctl = _control(args)
    if fam in ("besselj", "besseli"):
        if args.x is None:
            raise _UsageError(f"{fam} needs --x")
        fn = bessel.bessel_j if fam == "besselj" else bessel.bessel_i
        return fn(int(args.n), float(args.x), ctl).value
    if fam == "tricomi":
        if args.alpha is None or args.x is None:
            raise _UsageError("tricomi needs --alpha and --x")
        return bessel.tricomi(float(args.alpha), float(args.x), ctl).value
    if fam == "hermite_bessel":
        if args.nu is None or args.xs is None:
            raise _UsageError("hermite_bessel needs --nu and --xs")
        return bessel.hermite_bessel(float(args.nu), tuple(map(float, args.xs)), ctl).value
    if fam == "even_gf":
        if args.x is None or args.y is None or args.t is None:
            raise _UsageError("even_gf needs --x, --y and --t")
        return bessel.even_hermite_gf(float(args.x), float(args.y), float(args.t))
    if fam == "hermite_m":
        if args.xs is None:
            raise _UsageError("hermite_m needs --xs (the m tableau arguments)")
        if all(_is_exact(v) for v in args.xs):
            return polynomials.hermite_m(args.n, tuple(Fraction(v) for v in args.xs))
        return polynomials.hermite_m(args.n, tuple(map(float, args.xs)))
    # two-variable polynomial families
    if args.x is None or args.y is None:
        raise _UsageError(f"{fam} needs --x and --y")
    exact_route = _is_exact(args.x) and _is_exact(args.y)
    if fam == "laguerre2":
        if exact_route:
            return oracle.exact_laguerre(args.n, Fraction(args.x), Fraction(args.y))
        return polynomials.laguerre2(args.n, float(args.x), float(args.y))
    if fam == "hermite2":
        if exact_route:
            return oracle.exact_hermite(args.n, Fraction(args.x), Fraction(args.y))
        return polynomials.hermite2(args.n, float(args.x), float(args.y))
    if fam == "hybrid_hl":
        if exact_route:
            return oracle.exact_hybrid(args.n, Fraction(args.x), Fraction(args.y))
        return polynomials.hybrid_hl(args.n, float(args.x), float(args.y))
    if fam == "assoc_laguerre":
        if args.alpha is None:
            raise _UsageError("assoc_laguerre needs --alpha")
        if exact_route and _is_exact(args.alpha) and Fraction(args.alpha).denominator == 1:
            return oracle.exact_assoc_laguerre(
                args.n, int(Fraction(args.alpha)), Fraction(args.x), Fraction(args.y)
            )
        return polynomials.assoc_laguerre(
            args.n, float(args.alpha), float(args.x), float(args.y)
        )
    raise _UsageError(f"unknown family {fam!r}")


def cmd_eval(args) -> int:
    value = _eval_value(args)
    if args.format == "json":
        payload = {"value": str(value) if isinstance(value, Fraction) else value}
        payload["display"] = display_number(value, args.full)
        _emit(json.dumps(payload, sort_keys=True) + "\n", args)
    else:
        _emit(display_number(value, args.full) + "\n", args)
    return 0


# --------------------------------------------------------------- approx

def _approx_tag(args) -> str:
    """Canonical family tag for approx/sweep, with usage-level validation."""
    try:
        tag = canonical_tag(args.family)
    except ValueError as exc:
        raise _UsageError(str(exc)) from None
    if tag == "HermiteM":
        raise _UsageError(
            "approximations cover " + ", ".join(_APPROX_FAMILIES) + f"; got {args.family!r}"
        )
    if tag == "AssocLaguerre" and args.alpha is None:
        raise _UsageError("assoc_laguerre needs --alpha")
    if args.j2 and args.closed:
        raise _UsageError("choose at most one of --j2 and --closed")
    return tag


def _report_rows(report, x_in=None, y_in=None):
    """Machine rows always carry full precision; display trimming is markdown-only.

    The report itself stores the point as floats; the original parsed
    inputs are passed alongside so exact fractions print as fractions.
    """
    x = report.point[0] if x_in is None else x_in
    y = report.point[1] if y_in is None else y_in
    return {
        "family": report.family.tag,
        "n": report.n,
        "x": str(x) if isinstance(x, Fraction) else repr(float(x)),
        "y": str(y) if isinstance(y, Fraction) else repr(float(y)),
        "m": report.order_m,
        "exact": repr(float(report.exact)),
        "approx": repr(float(report.approx)),
        "rel_error": repr(float(report.relative_error)),
        "terms": report.terms_used,
    }


def cmd_approx(args) -> int:
    tag = _approx_tag(args)
    variant = "series"
    if args.j2:
        variant = "j2"
    if args.closed:
        variant = "closed"
    report = make_report(
        tag,
        args.n,
        (args.x, args.y),
        m=args.m,
        ctl=_control(args),
        alpha=args.alpha,
        variant=variant,
    )
    row = _report_rows(report, args.x, args.y)
    if args.format == "json":
        _emit(json.dumps(row, sort_keys=True) + "\n", args)
    elif args.format == "csv":
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=list(row), lineterminator="\n")
        w.writeheader()
        w.writerow(row)
        _emit(buf.getvalue(), args)
    else:
        lines = [
            f"family: {row['family']}",
            f"n: {row['n']}",
            f"point: x={row['x']}, y={row['y']}",
            f"order: m={row['m']} ({variant})",
            f"exact: {display_number(report.exact, args.full)}",
            f"approx: {display_number(report.approx, args.full)}",
            f"relative error: {_display_error(report.relative_error, args.full)}",
            f"terms used: {row['terms']}",
        ]
        _emit("\n".join(lines) + "\n", args)
    return 0


# ---------------------------------------------------------------- table

def _table_row_cells(result, rr, full: bool):
    fmt = result.spec.value_format
    rec_val = "" if rr.row.expected_value is None else format_value(rr.row.expected_value, fmt)
    comp_val = repr(rr.computed) if full else format_value(rr.computed, fmt)
    rec_err = "" if rr.row.expected_rel_error is None else format_sig2(rr.row.expected_rel_error)
    comp_err = _display_error(rr.rel_error, full)
    if rr.ok:
        status = "ok"
    else:
        parts = []
        if rr.value_ok is False:
            parts.append("value mismatch")
        if rr.error_ok is False:
            parts.append("error-digits mismatch")
        status = ", ".join(parts)
    return rec_val, comp_val, rec_err, comp_err, status


def cmd_table(args) -> int:
    result = run_table(args.table_id, ctl=_control(args))
    spec = result.spec

    if args.format == "json":
        rows = []
        for rr in result.rows:
            rows.append(
                {
                    "label": rr.row.label,
                    "selector": rr.row.selector,
                    "m": rr.row.m,
                    "recorded_value": rr.row.expected_value,
                    "computed_value": rr.computed,
                    "recorded_rel_error": rr.row.expected_rel_error,
                    "computed_rel_error": rr.rel_error,
                    "value_ok": rr.value_ok,
                    "error_ok": rr.error_ok,
                    "note": rr.row.note,
                }
            )
        payload = {
            "table_id": spec.table_id,
            "title": spec.title,
            "family": spec.family,
            "n": spec.n,
            "x": str(spec.x),
            "y": str(spec.y),
            "mode": spec.mode,
            "pattern_ok": result.pattern_ok,
            "passed": result.passed,
            "offending": list(result.offending),
            "note": spec.note,
            "rows": rows,
        }
        text = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    elif args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(
            [
                "label",
                "recorded_value",
                "computed_value",
                "recorded_rel_error",
                "computed_rel_error",
                "status",
            ]
        )
        for rr in result.rows:
            w.writerow([rr.row.label, *_table_row_cells(result, rr, args.full)])
        text = buf.getvalue()
        text += f"# note: {spec.note}\n"
        for rr in result.rows:
            if rr.row.note:
                text += f"# note ({rr.row.label}): {rr.row.note}\n"
        text += f"# verdict: {'PASS' if result.passed else 'FAIL'}\n"
    else:
        lines = [
            f"## Accuracy table {spec.table_id}: {spec.title}",
            f"configuration: family {spec.family}, n={spec.n}, x={spec.x}, y={spec.y}",
            "",
            "| row | recorded value | computed | recorded rel err | computed rel err | status |",
            "|---|---|---|---|---|---|",
        ]
        for rr in result.rows:
            cells = _table_row_cells(result, rr, args.full)
            lines.append("| " + " | ".join([rr.row.label, *cells]) + " |")
        lines.append("")
        lines.append(f"note: {spec.note}")
        for rr in result.rows:
            if rr.row.note:
                lines.append(f"note ({rr.row.label}): {rr.row.note}")
        if spec.mode == "pattern":
            errs = [rr.rel_error for rr in result.rows if rr.rel_error is not None]
            span = errs[0] / errs[-1] if errs and errs[-1] > 0 else float("inf")
            lines.append(
                "pattern verdict: recomputed errors "
                + ("decay monotonically" if result.pattern_ok else "do not decay as recorded")
                + f" across orders (span {format_sig2(span)})"
            )
        if result.passed:
            lines.append("verdict: PASS")
        else:
            lines.append("verdict: FAIL; mismatched rows: " + "; ".join(result.offending))
        text = "\n".join(lines) + "\n"

    _emit(text, args)

    if args.plot:
        from .plotting import save_table_plot

        save_table_plot(result, args.plot)

    return 0 if result.passed else 1


# ---------------------------------------------------------------- sweep

def cmd_sweep(args) -> int:
    tag = _approx_tag(args)
    if args.x is None and args.xn is None:
        raise _UsageError("sweep needs --x or --xn")
    if args.y is None and args.yn2 is None:
        raise _UsageError("sweep needs --y or --yn2")
    variant = "series"
    if args.j2:
        variant = "j2"
    if args.closed:
        variant = "closed"
    ctl = _control(args)

    ns = tuple(sorted(set(args.n)))
    ms = tuple(sorted(set(args.m)))
    rows = []
    errors = {}
    for n in ns:
        if args.xn is not None:
            x = Fraction(args.xn, n) if _is_exact(args.xn) else float(args.xn) / n
        else:
            x = args.x
        if args.yn2 is not None:
            y = Fraction(args.yn2, n * n) if _is_exact(args.yn2) else float(args.yn2) / n**2
        else:
            y = args.y
        for m in ms:
            report = make_report(
                tag, n, (x, y), m=m, ctl=ctl, alpha=args.alpha, variant=variant
            )
            rows.append(_report_rows(report, x, y))
            errors[(n, m)] = report.relative_error

    if args.format == "json":
        text = json.dumps(rows, indent=2, sort_keys=True) + "\n"
    elif args.format == "markdown":
        header = list(rows[0]) if rows else []
        lines = ["| " + " | ".join(header) + " |", "|" + "---|" * len(header)]
        for row in rows:
            lines.append("| " + " | ".join(str(row[k]) for k in header) + " |")
        text = "\n".join(lines) + "\n"
    else:
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=list(rows[0]) if rows else [], lineterminator="\n")
        w.writeheader()
        for row in rows:
            w.writerow(row)
        text = buf.getvalue()

    _emit(text, args)

    if args.plot:
        from .plotting import save_sweep_plot

        title = f"{tag} approximation error, x={args.x if args.xn is None else f'{args.xn}/n'}"
        save_sweep_plot(ns, ms, errors, title, args.plot)

    return 0


# ----------------------------------------------------------------- main

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format",
        choices=("csv", "json", "markdown"),
        default="markdown",
        help="output format (default markdown)",
    )
    common.add_argument(
        "--full",
        action="store_true",
        help="print full precision instead of the table display precision",
    )
    common.add_argument(
        "--tol", type=float, default=1e-15, help="series stopping tolerance"
    )
    common.add_argument(
        "--max-terms", type=int, default=200, help="series term budget"
    )
    common.add_argument("--out", help="write output to this file instead of stdout")

    parser = argparse.ArgumentParser(
        prog="umbralpoly",
        description=(
            "Evaluate two-variable special polynomials, their Bessel-type "
            "companions, and high-degree approximation formulas. Numbers "
            "given as fractions ('1/3') or plain integers use the exact "
            "rational route; decimals use the float route. Write negative "
            "fractions with the equals form, e.g. --y=-1/8."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser(
        "eval",
        parents=[common],
        help="evaluate one family or series at a point",
        description=(
            "Evaluate a polynomial family or Bessel-type series. Fraction or "
            "integer arguments stay exact; decimal arguments use floats."
        ),
    )
    p_eval.add_argument("family", choices=_EVAL_FAMILIES)
    p_eval.add_argument("--n", type=int, default=0, help="degree or integer order")
    p_eval.add_argument("--x", type=parse_number)
    p_eval.add_argument("--y", type=parse_number)
    p_eval.add_argument("--alpha", type=parse_number, help="shift parameter")
    p_eval.add_argument("--nu", type=parse_number, help="series order (hermite_bessel)")
    p_eval.add_argument("--t", type=parse_number, help="generating variable (even_gf)")
    p_eval.add_argument(
        "--xs", type=parse_number_list, help="comma list of tableau arguments"
    )
    p_eval.set_defaults(fn=cmd_eval)

    p_approx = sub.add_parser(
        "approx",
        parents=[common],
        help="order-m approximation with its exact value and relative error",
    )
    p_approx.add_argument("family", help="laguerre2, assoc_laguerre, hermite2 or hybrid_hl")
    p_approx.add_argument("--n", type=int, required=True)
    p_approx.add_argument("--x", type=parse_number, required=True)
    p_approx.add_argument("--y", type=parse_number, required=True)
    p_approx.add_argument("--m", type=int, default=1, help="truncation order")
    p_approx.add_argument("--alpha", type=parse_number)
    p_approx.add_argument(
        "--j2", action="store_true", help="two-term Bessel J form (laguerre2 only)"
    )
    p_approx.add_argument(
        "--closed", action="store_true", help="closed Gaussian form (hermite2 only)"
    )
    p_approx.set_defaults(fn=cmd_approx)

    p_table = sub.add_parser(
        "table",
        parents=[common],
        help="recompute a bundled reference table and compare",
    )
    p_table.add_argument("table_id", type=int, choices=TABLE_IDS)
    p_table.add_argument("--plot", help="also render an error chart to this file")
    p_table.set_defaults(fn=cmd_table)

    p_sweep = sub.add_parser(
        "sweep",
        parents=[common],
        help="grid of approximation reports over n and m",
    )
    p_sweep.add_argument("family")
    p_sweep.add_argument(
        "--n", type=parse_int_list, required=True, help="e.g. 8,16,32 or 8..64*2"
    )
    p_sweep.add_argument("--m", type=parse_int_list, default=(1,), help="e.g. 1..6")
    p_sweep.add_argument("--x", type=parse_number, help="fixed x")
    p_sweep.add_argument(
        "--xn", type=parse_number, help="scaled x: use x = value/n at each n"
    )
    p_sweep.add_argument("--y", type=parse_number, help="fixed y")
    p_sweep.add_argument(
        "--yn2", type=parse_number, help="scaled y: use y = value/n^2 at each n"
    )
    p_sweep.add_argument("--alpha", type=parse_number)
    p_sweep.add_argument("--j2", action="store_true")
    p_sweep.add_argument("--closed", action="store_true")
    p_sweep.add_argument("--plot", help="also render error-decay curves to this file")
    p_sweep.set_defaults(fn=cmd_sweep)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except (GammaPoleError, DomainError, NoConvergenceError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (UmbralError, ValueError, ZeroDivisionError, OverflowError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
