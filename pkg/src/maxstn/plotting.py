"""Matplotlib figure of benchmark ratios, written next to the CSV."""
from __future__ import annotations

import math

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .theory import RHO  # noqa: E402

CASE1_MIN = math.sqrt(2 - math.sqrt(3))

RC = {
    "font.size": 9,
    "axes.labelsize": 9,
    "legend.fontsize": 8,
    "figure.figsize": (5.0, 3.2),
    "svg.hashsalt": "maxstn",
    "svg.fonttype": "none",
}


def plot_ratios(rows: list[dict], path) -> None:
    """Scatter A2 ratios (vs exact and certified) against n.

    ``rows`` are benchmark rows; missing values are skipped.  SVG/PDF/PNG
    metadata dates are suppressed so reruns produce identical files.
    """
    with plt.rc_context(RC):
        fig, ax = plt.subplots()
        for key, marker, label in (("ratio_vs_exact", "o", "A2 / exact"),
                                   ("certified_ratio", "x", "A2 / best upper bound")):
            pts = [(r["n"], r[key]) for r in rows if r.get(key) is not None]
            if pts:
                ax.scatter(*zip(*pts), marker=marker, s=14, label=label)
        ax.axhline(RHO, color="k", lw=0.8, ls="--", label=f"rho = {RHO:.4f}")
        ax.axhline(CASE1_MIN, color="0.5", lw=0.8, ls=":", label="sqrt(2 - sqrt 3)")
        ax.set_xlabel("n (regions)")
        ax.set_ylabel("ratio")
        ax.legend(loc="best", frameon=False)
        fig.tight_layout()
        path = str(path)
        ext = path.rsplit(".", 1)[-1].lower()
        metadata = {"Date": None} if ext in ("svg", "pdf") else {"Software": None}
        fig.savefig(path, metadata=metadata)
        plt.close(fig)
