"""PNG renderings of lower graphs and Bruhat intervals."""
from __future__ import annotations

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .bruhat import Interval, LowerGraph  # noqa: E402
from .double import length  # noqa: E402
from .notation import format_element, format_root  # noqa: E402


def plot_lower_graph(g: LowerGraph, window, corner_points, path: str) -> None:
    """Members of Gamma as filled dots, the boundary line, corners ringed."""
    fig, ax = plt.subplots(figsize=(6, 5))
    inside = [(r, j) for r, j in window.points() if g.contains(r, j)]
    outside = [(r, j) for r, j in window.points() if not g.contains(r, j)]
    if outside:
        ax.scatter(*zip(*outside), s=12, facecolors="none", edgecolors="0.7", linewidths=0.6)
    if inside:
        ax.scatter(*zip(*inside), s=22, color="tab:blue", label="in graph")
    rs = [window.r_min, window.r_max]
    ax.plot(rs, [g.boundary(r) for r in rs], color="tab:red", lw=1, label="j = c(r)")
    ax.axhline(0, color="k", lw=0.6)
    pts = [(a.r, a.j) for a in corner_points if window.contains(a.r, a.j)]
    if pts:
        ax.scatter(*zip(*pts), s=110, facecolors="none", edgecolors="tab:orange", linewidths=1.8, label="corner")
    ax.set_xlim(window.r_min - 0.5, window.r_max + 0.5)
    ax.set_ylim(window.j_min - 0.5, window.j_max + 0.5)
    ax.set_xlabel("r (delta)")
    ax.set_ylabel("j (pi)")
    ax.set_title(f"lower graph, nu = {','.join(map(str, g.nu))}, shape {g.shape}")
    ax.legend(loc="upper right", fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)


def plot_interval(iv: Interval, path: str) -> None:
    """Hasse diagram laid out by length, one row per rank."""
    rows: dict[int, list] = {}
    for z in iv.elements:
        rows.setdefault(length(z), []).append(z)
    pos = {}
    for ell, zs in rows.items():
        for i, z in enumerate(zs):
            pos[z] = (i - (len(zs) - 1) / 2, ell)
    width = max((len(zs) for zs in rows.values()), default=1)
    fig, ax = plt.subplots(figsize=(max(6, 3.2 * width), 1.6 * max(2, len(rows))))
    for top, bottom, alpha in iv.edges:
        (x0, y0), (x1, y1) = pos[top], pos[bottom]
        ax.plot([x0, x1], [y0, y1], color="0.5", lw=1)
        ax.text(0.7 * x0 + 0.3 * x1, 0.7 * y0 + 0.3 * y1, format_root(alpha), fontsize=6, color="tab:red", ha="center")
    for z, (px, py) in pos.items():
        ax.text(px, py, format_element(z), fontsize=7, ha="center", va="center",
                bbox=dict(boxstyle="round", fc="white", ec="tab:blue"))
    ax.set_ylabel("length")
    ax.set_xticks([])
    if rows:
        ax.set_yticks(sorted(rows))
        ax.set_ylim(min(rows) - 0.6, max(rows) + 0.6)
    ax.set_xlim(-width / 2 - 0.2, width / 2 + 0.2)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
