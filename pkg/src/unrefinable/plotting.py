"""PNG figures for verification reports and Young diagrams."""

from __future__ import annotations

import os
from typing import Iterable, List, Optional, Sequence, Set, Tuple

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
from matplotlib.patches import Rectangle  # noqa: E402

from .young import YoungDiagram  # noqa: E402

# fixed metadata keeps PNG bytes stable between runs
_META = {"Software": None}


def draw_diagram(
    ax,
    y: YoungDiagram,
    hooks: bool = True,
    highlight: Iterable[Tuple[int, int]] = (),
    title: Optional[str] = None,
) -> None:
    """Draw ``y`` in English notation on ``ax``; highlighted cells are shaded."""
    marked: Set[Tuple[int, int]] = set(highlight)
    grid = y.hooks.grid
    for i, row in enumerate(grid, 1):
        for j, h in enumerate(row, 1):
            face = "#f4b6c2" if (i, j) in marked else "white"
            ax.add_patch(Rectangle((j - 1, -i), 1, 1, facecolor=face, edgecolor="black", lw=0.8))
            if hooks:
                ax.text(j - 0.5, -i + 0.5, str(h), ha="center", va="center", fontsize=7)
    width = y.rows[0] if y.rows else 1
    ax.set_xlim(-0.2, width + 0.2)
    ax.set_ylim(-len(y.rows) - 0.2, 0.2)
    ax.set_aspect("equal")
    ax.axis("off")
    if title:
        ax.set_title(title, fontsize=8)


def save_diagram(y: YoungDiagram, path: str, hooks: bool = True,
                 highlight: Iterable[Tuple[int, int]] = (), title: Optional[str] = None) -> str:
    w = max(2.0, 0.3 * (y.rows[0] if y.rows else 1))
    h = max(2.0, 0.3 * len(y.rows))
    fig, ax = plt.subplots(figsize=(w, h))
    draw_diagram(ax, y, hooks=hooks, highlight=highlight, title=title)
    fig.savefig(path, dpi=120, bbox_inches="tight", metadata=_META)
    plt.close(fig)
    return path


def save_diagram_panel(
    items: Sequence[Tuple[YoungDiagram, Iterable[Tuple[int, int]], str]],
    path: str,
    cols: int = 3,
) -> str:
    """One subplot per ``(diagram, highlighted cells, title)``."""
    cols = max(1, min(cols, len(items)))
    rows = (len(items) + cols - 1) // cols
    fig, axes = plt.subplots(rows, cols, figsize=(4 * cols, 4 * rows), squeeze=False)
    for ax in axes.flat:
        ax.axis("off")
    for ax, (y, hl, title) in zip(axes.flat, items):
        draw_diagram(ax, y, highlight=hl, title=title)
    fig.tight_layout()
    fig.savefig(path, dpi=110, bbox_inches="tight", metadata=_META)
    plt.close(fig)
    return path


def save_count_chart(labels: List[str], expected: List[int], got: List[int], path: str,
                     title: str = "") -> str:
    fig, ax = plt.subplots(figsize=(max(4.0, 0.45 * len(labels)), 3.5))
    xs = range(len(labels))
    ax.bar([x - 0.2 for x in xs], expected, width=0.4, label="expected")
    ax.bar([x + 0.2 for x in xs], got, width=0.4, label="enumerated")
    for x, (e, g) in enumerate(zip(expected, got)):
        if e != g:
            ax.annotate("x", (x, max(e, g)), ha="center", va="bottom", color="red")
    ax.set_xticks(list(xs))
    ax.set_xticklabels(labels, rotation=70, fontsize=7)
    ax.set_ylabel("count")
    ax.legend(fontsize=8)
    if title:
        ax.set_title(title, fontsize=9)
    fig.tight_layout()
    fig.savefig(path, dpi=110, metadata=_META)
    plt.close(fig)
    return path


def save_series(xs: List[int], ys: List[int], path: str, xlabel: str, ylabel: str,
                title: str = "", log: bool = False) -> str:
    fig, ax = plt.subplots(figsize=(5, 3.5))
    ax.plot(xs, ys, marker=".", lw=1)
    if log:
        ax.set_yscale("log")
    ax.set_xlabel(xlabel)
    ax.set_ylabel(ylabel)
    if title:
        ax.set_title(title, fontsize=9)
    fig.tight_layout()
    fig.savefig(path, dpi=110, metadata=_META)
    plt.close(fig)
    return path


def report_figures(rep, figdir: str) -> List[str]:
    """Figures for a suite report; returns written paths."""
    os.makedirs(figdir, exist_ok=True)
    out = []
    if rep.suite == "counts" and rep.rows:
        labels = [f"{r['case']} n={r['n']} k={r['k']}" if r["k"] else f"even n={r['n']}" for r in rep.rows]
        out.append(save_count_chart(
            labels, [r["expected"] for r in rep.rows], [r["got"] for r in rep.rows],
            os.path.join(figdir, "counts.png"), "maximal unrefinable partitions",
        ))
    elif rep.suite == "equivalence" and rep.rows:
        out.append(save_series(
            [r["weight"] for r in rep.rows], [max(1, r["partitions"]) for r in rep.rows],
            os.path.join(figdir, "equivalence.png"), "weight", "partitions checked", log=True,
        ))
    elif rep.suite == "structure" and rep.rows:
        rows = [r for r in rep.rows if r["elements"]]
        out.append(save_count_chart(
            [f"{r['case']} n={r['n']} k={r['k']}" for r in rows],
            [r["elements"] for r in rows],
            [r["elements"] if r["pass"] else 0 for r in rows],
            os.path.join(figdir, "structure.png"), "elements with every invariant",
        ))
    elif rep.suite == "oeis-check" and rep.rows:
        fig, ax = plt.subplots(figsize=(5, 3.5))
        xs = [r["index"] for r in rep.rows]
        ax.plot(xs, [r["file"] for r in rep.rows], "o", mfc="none", label="b-file")
        ax.plot(xs, [r["computed_t_ge_2"] for r in rep.rows], ".", label="computed")
        ax.set_xlabel("N")
        ax.set_ylabel("unrefinable partitions")
        ax.legend(fontsize=8)
        fig.tight_layout()
        path = os.path.join(figdir, "oeis_check.png")
        fig.savefig(path, dpi=110, metadata=_META)
        plt.close(fig)
        out.append(path)
    return out


def bijection_figure(rep, figdir: str) -> str:
    """Diagrams of every max-missing element, with the cells the forward map reads shaded."""
    from .bijection import NT5, diagram_of
    from .young import quasi_symmetric_profile

    os.makedirs(figdir, exist_ok=True)
    case = rep.case
    items = []
    for lam in rep.ubar:
        y = diagram_of(lam)
        if case.case == NT5:
            hl = [(i, i) for i in range(2, len(y.hooks.diagonal) + 1)]
        else:
            try:
                z = quasi_symmetric_profile(y, case.n).z
                hl = [(i, z + 1) for i in range(2, z + 1)]
            except ValueError:
                hl = []
        eta = rep.images.get(lam.parts, ())
        items.append((y, hl, f"{lam}\neta={tuple(eta)}"))
    path = os.path.join(figdir, f"bijection_{case.case}_n{case.n}_k{case.k}.png")
    if not items:
        fig, ax = plt.subplots(figsize=(3, 1))
        ax.axis("off")
        ax.text(0.5, 0.5, "no elements", ha="center", va="center")
        fig.savefig(path, dpi=110, metadata=_META)
        plt.close(fig)
        return path
    return save_diagram_panel(items, path)


def exclusion_figure(demo: dict, path: str) -> str:
    """Raw construction for an excluded eta, offending cells shaded."""
    from .bijection import diagram_of
    from .partitions import make_partition

    y = diagram_of(make_partition(demo["partition"]))
    hl = [(i, j) for i, j, _ in demo["offending_hooks"]]
    return save_diagram(y, path, highlight=hl, title=f"eta={tuple(demo['eta'])}")
