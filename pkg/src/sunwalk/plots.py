"""Figure rendering for decompositions and scan reports.

Pure file output (Agg backend): each sunlet component is drawn with
its cycle on an inner circle and ray vertices on an outer circle,
matching the usual way these graphs are pictured.
"""

from __future__ import annotations

import math

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .graph import Decomposition
from .scanner import ScanReport


def render_decomposition(d: Decomposition, path: str) -> str:
    """Draw every sunlet component and write the figure to path."""
    n_comp = len(d.components)
    cols = math.ceil(math.sqrt(n_comp))
    rows = math.ceil(n_comp / cols)
    fig, axes = plt.subplots(rows, cols, figsize=(3.2 * cols, 3.2 * rows))
    flat = axes.flat if n_comp > 1 else [axes]
    fontsize = 9 if d.context.cycle_length <= 24 else 6
    for ax, comp in zip(flat, d.components):
        n = len(comp.cycle)
        angles = [math.pi / 2 - 2 * math.pi * k / n for k in range(n)]
        inner = [(math.cos(t), math.sin(t)) for t in angles]
        outer = [(2 * math.cos(t), 2 * math.sin(t)) for t in angles]
        for k in range(n):
            ax.annotate(
                "",
                xy=inner[(k + 1) % n],
                xytext=inner[k],
                arrowprops=dict(arrowstyle="-|>", color="0.2", shrinkA=9, shrinkB=9),
            )
            ax.annotate(
                "",
                xy=inner[k],
                xytext=outer[k],
                arrowprops=dict(arrowstyle="-|>", color="0.5", shrinkA=9, shrinkB=9),
            )
        for k, v in enumerate(comp.cycle):
            ax.text(
                *inner[k], str(v),
                ha="center", va="center", fontsize=fontsize,
                bbox=dict(boxstyle="circle", fc="white", ec="0.2"),
            )
        for k, (outer_v, _) in enumerate(comp.rays):
            ax.text(
                *outer[k], str(outer_v),
                ha="center", va="center", fontsize=fontsize,
                bbox=dict(boxstyle="circle", fc="white", ec="0.5"),
            )
        ax.set_xlim(-2.7, 2.7)
        ax.set_ylim(-2.7, 2.7)
        ax.set_aspect("equal")
        ax.axis("off")
    for ax in list(flat)[n_comp:]:
        ax.axis("off")
    ctx = d.context
    fig.suptitle(
        f"p = {ctx.p}: {ctx.component_count} component(s), cycle length {ctx.cycle_length}"
    )
    fig.savefig(path, dpi=100)
    plt.close(fig)
    return path


def render_scan(report: ScanReport, path: str) -> str:
    """Plot cycle length against p with weak primes highlighted."""
    fig, ax = plt.subplots(figsize=(8, 5))
    strong = [r for r in report.records if not r.weak]
    weak = [r for r in report.records if r.weak]
    if strong:
        ax.scatter(
            [r.p for r in strong], [r.cycle_length for r in strong],
            s=12, color="0.4", label="ok",
        )
    if weak:
        ax.scatter(
            [r.p for r in weak], [r.cycle_length for r in weak],
            s=18, color="crimson", label="weak",
        )
    ax.axhline(report.threshold, ls="--", color="0.6", lw=1)
    ax.set_xlabel("p")
    ax.set_ylabel("cycle length")
    ax.set_title(
        f"[{report.lo}, {report.hi}]: {report.total_primes} primes, "
        f"{report.weak_primes} weak at threshold {report.threshold}"
    )
    ax.legend(loc="best")
    fig.tight_layout()
    fig.savefig(path, dpi=100)
    plt.close(fig)
    return path
