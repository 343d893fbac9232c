"""Summary figures rendered next to the delimited output.

Plots rasterize float approximations of the exact rationals; they are
presentation only and never feed back into any computation.
"""

from __future__ import annotations

import math
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .case_catalog import inner_product
from .stratifier import StrataSet

__all__ = ["render_figures"]


def render_figures(strata: StrataSet, directory: str | Path, stem: str) -> list[Path]:
    """Write the per-case summary figures; returns the created paths."""
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    case = strata.case

    norms = sorted(
        math.sqrt(float(inner_product(case, r.beta, r.beta))) for r in strata.records
    )
    fig, ax = plt.subplots(figsize=(7, 4.5))
    ax.step(range(1, len(norms) + 1), norms, where="mid", lw=1.2)
    ax.set_xlabel("stratum (sorted by norm)")
    ax.set_ylabel("|beta|")
    ax.set_title(f"case {case.label}: norm spectrum of the {len(norms)} strata")
    ax.grid(True, alpha=0.3)
    norm_path = directory / f"{stem}_beta_norms.png"
    fig.tight_layout()
    fig.savefig(norm_path, dpi=120)
    plt.close(fig)

    zs = [len(r.z_indices) for r in strata.records]
    ws = [len(r.w_indices) for r in strata.records]
    fig, ax = plt.subplots(figsize=(6, 6))
    # overlapping (|Z|,|W|) pairs are shown by marker area
    counts: dict[tuple[int, int], int] = {}
    for p in zip(zs, ws):
        counts[p] = counts.get(p, 0) + 1
    pts = sorted(counts)
    ax.scatter(
        [p[0] for p in pts],
        [p[1] for p in pts],
        s=[28 * counts[p] for p in pts],
        alpha=0.6,
        edgecolors="none",
    )
    ax.set_xlabel("|Z| coordinate count")
    ax.set_ylabel("|W| coordinate count")
    ax.set_title(f"case {case.label}: stratum coordinate profile")
    ax.grid(True, alpha=0.3)
    size_path = directory / f"{stem}_strata_sizes.png"
    fig.tight_layout()
    fig.savefig(size_path, dpi=120)
    plt.close(fig)
    return [norm_path, size_path]
