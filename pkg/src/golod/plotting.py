"""Betti table heatmap, rendered off-screen."""

from __future__ import annotations

import matplotlib
import matplotlib.ticker

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402


def betti_heatmap(table, path, title: str | None = None):
    """Write the aggregated (i, |I|) table to ``path`` (rows |I|, columns i)."""
    agg = table.aggregated()
    if agg:
        imax = max(i for i, _ in agg)
        jmax = max(j for _, j in agg)
    else:
        imax = jmax = 0
    grid = np.zeros((jmax + 1, imax + 1), dtype=int)
    for (i, j), r in agg.items():
        grid[j, i] = r
    fig, ax = plt.subplots(figsize=(1.2 + 0.45 * (imax + 1), 1.0 + 0.45 * (jmax + 1)))
    im = ax.imshow(np.ma.masked_equal(grid, 0), cmap="viridis", origin="lower",
                   aspect="equal", interpolation="nearest")
    top = max(agg.values(), default=1)
    for (i, j), r in agg.items():
        # dark text on the light end of viridis
        ax.text(i, j, str(r), ha="center", va="center", fontsize=8,
                color="k" if r > 0.6 * top else "w")
    ax.set_xticks(range(imax + 1))
    ax.set_yticks(range(jmax + 1))
    ax.set_xlabel("i")
    ax.set_ylabel("|I|")
    ax.set_title(title or f"Betti numbers over {table.field}", fontsize=9)
    if agg:
        cb = fig.colorbar(im, ax=ax, fraction=0.05)
        cb.ax.yaxis.set_major_locator(matplotlib.ticker.MaxNLocator(integer=True))
    fig.tight_layout()
    fig.savefig(path, dpi=120, metadata={"Software": None})
    plt.close(fig)
    return path
