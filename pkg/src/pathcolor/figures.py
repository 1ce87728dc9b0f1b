"""Figure rendering for the simulate subcommand.

Kept separate so the number-crunching modules never import matplotlib; the
CLI pulls this in only when a plot file is actually requested.
"""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt


def render_defects_vs_colors(rows, path: str) -> str:
    """One curve per protocol: normalized mean final defects against c/chi.

    rows are DatasetRow records; the 1.0 guide line marks parity with a
    plain random assignment.
    """
    series: dict[str, list[tuple[float, float]]] = {}
    for r in rows:
        series.setdefault(r.protocol, []).append((r.c_over_chi, r.normalized_mean))
    fig, ax = plt.subplots(figsize=(7.0, 4.5))
    for name, pts in series.items():
        pts.sort()
        ax.plot(
            [x for x, _ in pts],
            [y for _, y in pts],
            marker="o",
            markersize=3,
            linewidth=1.2,
            label=name,
        )
    ax.axhline(1.0, color="gray", linestyle="--", linewidth=0.8)
    ax.set_xlabel("colors relative to chromatic number (c/chi)")
    ax.set_ylabel("mean final defects / random-assignment mean")
    if series:
        n = next(iter(rows)).n
        trials = max(r.trials for r in rows)
        ax.set_title(f"one-round protocols on the {n}-node path ({trials} trials)")
    ax.grid(True, linewidth=0.3, alpha=0.6)
    ax.legend(fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path
