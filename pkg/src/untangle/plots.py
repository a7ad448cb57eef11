"""Matplotlib figures written next to reports (Agg backend, no display)."""

from __future__ import annotations

from pathlib import Path
from typing import Mapping, Sequence

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .geom import Point  # noqa: E402


def _draw(ax, g, d: Mapping[int, Point], fixed, title: str) -> None:
    for u, v in g.edges:
        ax.plot([float(d[u].x), float(d[v].x)], [float(d[u].y), float(d[v].y)], color="0.45", lw=0.7)
    xs = [float(d[v].x) for v in range(g.n)]
    ys = [float(d[v].y) for v in range(g.n)]
    face = ["black" if fixed is None or v in fixed else "white" for v in range(g.n)]
    ax.scatter(xs, ys, s=14, c=face, edgecolors="black", linewidths=0.7, zorder=3)
    ax.set_title(title, fontsize=9)
    ax.set_aspect("equal", adjustable="datalim")
    ax.set_xticks([])
    ax.set_yticks([])


def before_after(g, d0: Mapping[int, Point], d1: Mapping[int, Point], fixed, path: str | Path) -> Path:
    """Input and output drawings side by side; fixed vertices are filled."""
    fig, axes = plt.subplots(1, 2, figsize=(9, 4.5))
    _draw(axes[0], g, d0, fixed, "input")
    _draw(axes[1], g, d1, fixed, f"output ({len(fixed)} fixed of {g.n})")
    fig.tight_layout()
    path = Path(path)
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path


def fixed_vs_bound(ns: Sequence[int], fixed: Sequence[int], bound: Sequence[int], path: str | Path) -> Path:
    """Fixed counts of a batch of runs against the guaranteed minimum."""
    fig, ax = plt.subplots(figsize=(6, 4))
    ax.scatter(ns, fixed, s=12, label="fixed")
    order = sorted(range(len(ns)), key=lambda i: ns[i])
    ax.step([ns[i] for i in order], [bound[i] for i in order], where="post", color="red", label="guarantee")
    ax.set_xlabel("n")
    ax.set_ylabel("vertices")
    ax.legend()
    fig.tight_layout()
    path = Path(path)
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path
