"""Figures written to files: the Hasse diagram and a character chart."""

from __future__ import annotations

from pathlib import Path
from typing import Dict, List

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .action import CharacterTable  # noqa: E402
from .lattice import TamariLattice  # noqa: E402

STYLE = {
    "font.size": 9,
    "axes.titlesize": 10,
    "axes.spines.top": False,
    "axes.spines.right": False,
    "savefig.dpi": 150,
}


def _ranks(L: TamariLattice) -> List[int]:
    """Longest chain from the bottom, which is strictly monotone along covers."""
    best = L.longest_chains_from(L.bottom)
    return [best[i] for i in range(len(L))]


def hasse_layout(L: TamariLattice) -> Dict[int, tuple]:
    ranks = _ranks(L)
    rows: Dict[int, List[int]] = {}
    for i, r in enumerate(ranks):
        rows.setdefault(r, []).append(i)
    pos = {}
    for r, members in rows.items():
        k = len(members)
        for j, i in enumerate(members):
            pos[i] = (j - (k - 1) / 2, r)
    return pos


def plot_hasse(L: TamariLattice, path: str | Path, labels: bool | None = None) -> Path:
    """Nodes ranked by longest chain from the bottom; edges are covers."""
    path = Path(path)
    labels = len(L) <= 30 if labels is None else labels
    pos = hasse_layout(L)
    width = max(4.0, 0.9 * max(sum(1 for p in pos.values() if p[1] == r) for r in {p[1] for p in pos.values()}))
    height = max(3.0, 0.8 * (max(p[1] for p in pos.values()) + 1))
    with plt.rc_context(STYLE):
        fig, ax = plt.subplots(figsize=(width, height))
        for i, ups in enumerate(L.cover_edges):
            for j in ups:
                (x0, y0), (x1, y1) = pos[i], pos[j]
                ax.plot([x0, x1], [y0, y1], color="0.6", lw=0.8, zorder=1)
        xs = [pos[i][0] for i in range(len(L))]
        ys = [pos[i][1] for i in range(len(L))]
        ax.scatter(xs, ys, s=18, color="k", zorder=2)
        if labels:
            for i, P in enumerate(L.nodes):
                ax.annotate(str(P) or "-", pos[i], xytext=(0, 5), textcoords="offset points",
                            ha="center", fontsize=6)
        ax.set_title(f"{L.m}-Tamari lattice, n={L.n} ({len(L)} paths)")
        ax.set_axis_off()
        fig.tight_layout()
        fig.savefig(path)
        plt.close(fig)
    return path


def plot_characters(table: CharacterTable, path: str | Path) -> Path:
    """Enumerated characters and formula values per cycle type on a log scale."""
    path = Path(path)
    names = [str(r.partition) for r in table.rows]
    xs = range(len(names))
    with plt.rc_context(STYLE):
        fig, ax = plt.subplots(figsize=(max(4.0, 0.6 * len(names) + 2), 3.2))
        ax.bar([x - 0.2 for x in xs], [r.chi for r in table.rows], width=0.4, label="enumeration", color="0.3")
        ax.bar([x + 0.2 for x in xs], [r.formula for r in table.rows], width=0.4, label="formula", color="0.7")
        ax.set_yscale("log")
        ax.set_xticks(list(xs))
        ax.set_xticklabels(names, rotation=45, ha="right")
        ax.set_xlabel("cycle type")
        ax.set_ylabel("fixed labelled intervals")
        ax.set_title(f"characters, m={table.m}, n={table.n}")
        ax.legend(frameon=False)
        fig.tight_layout()
        fig.savefig(path)
        plt.close(fig)
    return path
