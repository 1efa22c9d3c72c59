"""Figure rendering for the CLI report paths.

CSV stays the primary product; these helpers draw the same data so a run
can drop a quick-look figure next to its table.  Everything renders off
screen (Agg) and avoids wall-clock-dependent content so repeated runs
produce identical files.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

from .search import SearchRecord
from .sets import Likeness

__all__ = [
    "plot_profile",
    "plot_density_histogram",
    "plot_ratios",
    "plot_scan",
    "save_figure",
]


def save_figure(fig: plt.Figure, path: str, dpi: int = 150) -> None:
    fig.savefig(path, dpi=dpi, metadata=_stable_metadata(path))
    plt.close(fig)


def _stable_metadata(path: str) -> dict:
    # PNG files embed a modification date by default; pin it for
    # byte-identical reruns.
    if path.lower().endswith(".png"):
        return {"Software": "repfn"}
    return {}


def plot_profile(
    ns: np.ndarray,
    r2_a: np.ndarray,
    r2_comp: np.ndarray,
    cross: np.ndarray,
    title: str,
) -> plt.Figure:
    """Representation counts against n, with the n/8 reference line."""
    fig, ax = plt.subplots(figsize=(8, 4.5))
    ax.plot(ns, r2_a, lw=0.8, label="r2(A, n)")
    ax.plot(ns, r2_comp, lw=0.8, ls="--", label="r2(complement, n)")
    ax.plot(ns, cross, lw=0.8, alpha=0.6, label="cross (both orders)")
    ax.plot(ns, ns / 8, color="k", lw=0.6, ls=":", label="n/8")
    ax.set_xlabel("n")
    ax.set_ylabel("pair count")
    ax.set_title(title)
    ax.legend(loc="upper left", fontsize=8)
    fig.tight_layout()
    return fig


def plot_density_histogram(
    histogram: np.ndarray,
    bucket_width: Fraction,
    density: Fraction,
    title: str,
) -> plt.Figure:
    """Distribution of r2[n]/n with the asymptotic center 1/8 marked."""
    fig, ax = plt.subplots(figsize=(8, 4.5))
    w = float(bucket_width)
    edges = np.arange(len(histogram)) * w
    ax.bar(edges, histogram, width=w, align="edge", color="#4878a8")
    ax.axvline(1 / 8, color="crimson", lw=1.0, label="1/8")
    ax.set_xlabel("r2(A, n) / n")
    ax.set_ylabel("count of n")
    ax.set_title(f"{title}  (in-band fraction {float(density):.4f})")
    ax.set_xlim(0, max(0.5, w * (np.max(np.nonzero(histogram)) + 2) if histogram.any() else 0.5))
    ax.legend(fontsize=8)
    fig.tight_layout()
    return fig


def plot_ratios(
    rows: Sequence[tuple[int, int, Fraction]],
    title: str,
) -> plt.Figure:
    """r2[n]/n along the chosen test sequence, against 1/8."""
    fig, ax = plt.subplots(figsize=(8, 4.5))
    ns = [row[0] for row in rows]
    ratios = [float(row[2]) for row in rows]
    ax.plot(ns, ratios, marker="o", ms=4, lw=0.8, label="r2(A, n) / n")
    ax.axhline(1 / 8, color="crimson", lw=1.0, ls="--", label="1/8")
    ax.set_xscale("log")
    ax.set_xlabel("n")
    ax.set_ylabel("ratio")
    ax.set_title(title)
    ax.legend(fontsize=8)
    fig.tight_layout()
    return fig


def plot_scan(
    records: Sequence[SearchRecord],
    n: int,
    title: str,
) -> plt.Figure:
    """last-zero positions per prefix with the catalogue thresholds."""
    fig, ax = plt.subplots(figsize=(8, 4.5))
    xs = np.arange(len(records))
    ys = [rec.last_zero for rec in records]
    colors = [
        "#777777" if rec.tm_like is not Likeness.NEITHER else "#4878a8"
        for rec in records
    ]
    ax.scatter(xs, ys, s=8, c=colors)
    ax.axhline(3 * n - 1, color="seagreen", lw=1.0, ls="--", label="3N-1 (attained)")
    ax.axhline(
        14 * (n - 1), color="crimson", lw=1.0, ls="--", label="14(N-1) (forbidden from)"
    )
    ax.set_xlabel("prefix index (lexicographic)")
    ax.set_ylabel("largest n with r2 = 0")
    ax.set_title(title)
    ax.legend(fontsize=8)
    fig.tight_layout()
    return fig
