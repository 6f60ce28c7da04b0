"""Figure rendering for batch runs.

Renders summary plots of a batch run to PNG files next to the delimited
output: seed counts against crossing number, the distribution of seed
counts, and the distribution of per-diagram compute times. Uses the Agg
backend so it works headless.
"""

from __future__ import annotations

from collections import Counter
from collections.abc import Iterable
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402  (backend must be set first)

from .batch import BatchRecord

__all__ = ["render_figures"]


def _exact_pairs(records: list[BatchRecord]) -> list[tuple[int, int]]:
    return [
        (r.n, r.omega)
        for r in records
        if r.omega_status == "exact" and r.n is not None and isinstance(r.omega, int)
    ]


def render_figures(records: Iterable[BatchRecord], out_dir: str | Path) -> list[Path]:
    """Write summary figures for ``records`` into ``out_dir``; returns the
    paths written. Figures without data are skipped."""
    rows = list(records)
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    written: list[Path] = []

    pairs = _exact_pairs(rows)
    if pairs:
        counts = Counter(pairs)
        fig, ax = plt.subplots(figsize=(6, 4))
        xs = [n for (n, _k) in counts]
        ys = [k for (_n, k) in counts]
        sizes = [20 + 12 * counts[p] for p in counts]
        ax.scatter(xs, ys, s=sizes, alpha=0.6, edgecolor="none")
        ax.set_xlabel("crossings")
        ax.set_ylabel("seed count")
        ax.set_title("seed count by crossing number")
        ax.yaxis.get_major_locator().set_params(integer=True)
        ax.xaxis.get_major_locator().set_params(integer=True)
        path = out / "omega_by_crossings.png"
        fig.savefig(path, dpi=150, bbox_inches="tight")
        plt.close(fig)
        written.append(path)

        hist = Counter(k for _n, k in pairs)
        fig, ax = plt.subplots(figsize=(6, 4))
        ks = sorted(hist)
        ax.bar([str(k) for k in ks], [hist[k] for k in ks], color="#4878a8")
        ax.set_xlabel("seed count")
        ax.set_ylabel("diagrams")
        ax.set_title("seed count distribution")
        path = out / "omega_hist.png"
        fig.savefig(path, dpi=150, bbox_inches="tight")
        plt.close(fig)
        written.append(path)

    elapsed = [r.elapsed_ms for r in rows if r.omega_status != "skipped"]
    if elapsed:
        fig, ax = plt.subplots(figsize=(6, 4))
        ax.hist(elapsed, bins=min(30, max(5, len(set(elapsed)))), color="#6a9a58")
        ax.set_xlabel("elapsed (ms)")
        ax.set_ylabel("diagrams")
        ax.set_title("per-diagram compute time")
        path = out / "elapsed_hist.png"
        fig.savefig(path, dpi=150, bbox_inches="tight")
        plt.close(fig)
        written.append(path)

    return written
