"""Figures written next to analysis and scan reports."""

from collections import Counter, defaultdict
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

PARITY_COLORS = {"even": "#4c72b0", "odd": "#dd8452"}

STYLE = {
    "font.size": 10,
    "axes.labelsize": 10,
    "axes.titlesize": 11,
    "legend.fontsize": 8,
    "xtick.labelsize": 8,
    "ytick.labelsize": 8,
    "axes.spines.top": False,
    "axes.spines.right": False,
    "savefig.dpi": 150,
}


def _save(fig, path):
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)
    return path


def plot_components(record, path, title=None):
    """Bar chart of coloring counts per component, coloured by parity."""
    with plt.rc_context(STYLE):
        fig, ax = plt.subplots(figsize=(5, 3))
        rows = record.components
        xs = range(len(rows))
        ax.bar(xs, [r[0] for r in rows], color=[PARITY_COLORS[r[2]] for r in rows])
        ax.set_xticks(list(xs))
        ax.set_xlabel("component")
        ax.set_ylabel("colorings")
        handles = [plt.Rectangle((0, 0), 1, 1, color=c) for c in PARITY_COLORS.values()]
        ax.legend(handles, list(PARITY_COLORS), frameon=False)
        ax.set_title(title or f"graph {record.graph_id}: n={record.n}, "
                              f"{record.num_components} components")
        return _save(fig, path)


def plot_scan(records, path):
    """Two panels: complex component counts, and witnesses per vertex count."""
    comp_hist = Counter(r.num_components for r in records)
    per_n = defaultdict(lambda: [0, 0])
    for r in records:
        per_n[r.n][0] += 1
        per_n[r.n][1] += r.tutte_witness
    with plt.rc_context(STYLE):
        fig, (left, right) = plt.subplots(1, 2, figsize=(8, 3))
        ks = sorted(comp_hist)
        left.bar([str(k) for k in ks], [comp_hist[k] for k in ks], color="0.5")
        left.set_yscale("log")
        left.set_xlabel("components of the coloring complex")
        left.set_ylabel("graphs")
        ns = sorted(per_n)
        right.bar([str(n) for n in ns], [per_n[n][1] for n in ns], color=PARITY_COLORS["odd"])
        right.set_xlabel("vertices")
        right.set_ylabel("Tutte witnesses")
        for i, n in enumerate(ns):
            right.annotate(f"/{per_n[n][0]}", (i, per_n[n][1]), ha="center", va="bottom",
                           fontsize=7)
        return _save(fig, path)
