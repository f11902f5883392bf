"""Headless figure rendering for table and sweep reports.

Figures are written straight to files; no interactive backend is ever
touched, so this works in pipelines and containers.
"""

from __future__ import annotations

from typing import Sequence

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402  (backend must be fixed first)

from .tables import TableResult


def save_table_plot(result: TableResult, path: str) -> str:
    """Bar chart of recomputed relative errors for one table's approximation rows."""
    labels = []
    errors = []
    for rr in result.rows:
        if rr.rel_error is None or rr.rel_error <= 0:
            continue
        labels.append(rr.row.label)
        errors.append(rr.rel_error)
    fig, ax = plt.subplots(figsize=(7, 4))
    ax.bar(range(len(errors)), errors, color="#4878cf")
    ax.set_yscale("log")
    ax.set_xticks(range(len(labels)))
    ax.set_xticklabels(labels, rotation=20, ha="right", fontsize=8)
    ax.set_ylabel("relative error")
    spec = result.spec
    ax.set_title(f"{spec.title} (n={spec.n}, x={spec.x}, y={spec.y})")
    ax.grid(True, axis="y", which="both", alpha=0.3)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path


def save_sweep_plot(
    ns: Sequence[int],
    ms: Sequence[int],
    errors: dict,
    title: str,
    path: str,
) -> str:
    """Error-decay curves: one line per truncation order, degree on the x axis.

    errors maps (n, m) to a positive relative error; missing or
    non-positive entries are skipped so log scaling stays valid.
    """
    fig, ax = plt.subplots(figsize=(7, 4.5))
    for m in ms:
        xs = [n for n in ns if errors.get((n, m), 0) > 0]
        ys = [errors[(n, m)] for n in xs]
        if xs:
            ax.plot(xs, ys, marker="o", label=f"order m={m}")
    ax.set_yscale("log")
    ax.set_xlabel("degree n")
    ax.set_ylabel("relative error")
    ax.set_title(title)
    ax.grid(True, which="both", alpha=0.3)
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path
