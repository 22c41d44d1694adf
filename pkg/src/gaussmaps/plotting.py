"""Rank-versus-genus figure for sweeps."""
from __future__ import annotations

from pathlib import Path
from typing import Sequence

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
from matplotlib.ticker import MaxNLocator  # noqa: E402

from .report import RankReport  # noqa: E402


def plot_rank_vs_genus(reports: Sequence[RankReport], path: str | Path, title: str | None = None) -> Path:
    """Scatter rank mu2 and rank mu1K against g, with 2g-5 and 4g-18 drawn in.

    Metadata is pinned so repeated runs write identical PNG bytes.
    """
    path = Path(path)
    gs = [r.genus for r in reports]
    fig, ax = plt.subplots(figsize=(6, 4), dpi=100)
    if gs:
        lo, hi = min(gs), max(gs)
        ref = list(range(lo, hi + 1))
        ax.plot(ref, [2 * g - 5 for g in ref], ls="--", lw=1, color="0.5", label="$2g-5$")
        trig = [g for g in ref if 4 * g - 18 >= 0]
        if trig:
            ax.plot(trig, [4 * g - 18 for g in trig], ls=":", lw=1, color="0.3", label="$4g-18$")
        ax.plot(gs, [r.rank_mu2 for r in reports], "o", color="C0", label=r"rank $\mu_2$")
        ax.plot(gs, [r.rank_mu1K for r in reports], "s", mfc="none", color="C1",
                label=r"rank $\mu_{1,K}$")
    ax.xaxis.set_major_locator(MaxNLocator(integer=True))
    ax.yaxis.set_major_locator(MaxNLocator(integer=True))
    ax.set_xlabel("genus $g$")
    ax.set_ylabel("rank")
    if title:
        ax.set_title(title)
    ax.grid(alpha=0.3)
    ax.legend(frameon=False, fontsize="small")
    fig.tight_layout()
    path.parent.mkdir(parents=True, exist_ok=True)
    fig.savefig(path, metadata={"Software": None})
    plt.close(fig)
    return path


__all__ = ["plot_rank_vs_genus"]
