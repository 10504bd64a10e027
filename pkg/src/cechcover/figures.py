"""Matplotlib figures for reports and benchmarks.

Complements the SVG renderer: render.render_svg is the byte-stable record
of a complex, while these figures are the human-facing PNG/PDF companions
written next to reports and benchmark CSVs.  The Agg backend is forced so
rendering works headless.
"""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
from matplotlib.patches import Circle, Polygon

from .complexes import DiskSet, SimplicialComplex


def complex_figure(ds: DiskSet, cx: SimplicialComplex, path: str | Path) -> None:
    """Draw disks, edges, and filled faces (darker with dimension) to a file."""
    fig, ax = plt.subplots(figsize=(7, 7))
    for d in ds:
        ax.add_patch(
            Circle(
                (d.center.x, d.center.y),
                d.radius,
                facecolor="#4a90d9",
                alpha=0.12,
                edgecolor="#1f5fa8",
                linewidth=1.0,
            )
        )
    centers = {d.id: (d.center.x, d.center.y) for d in ds}
    for k in range(2, len(cx.levels)):
        alpha = min(0.85, 0.30 + 0.18 * (k - 2))
        for simplex in cx.levels[k]:
            ax.add_patch(
                Polygon(
                    [centers[v] for v in simplex],
                    closed=True,
                    facecolor="#2c6fbb",
                    alpha=alpha,
                    edgecolor="none",
                )
            )
    if len(cx.levels) > 1:
        for i, j in cx.levels[1]:
            (x1, y1), (x2, y2) = centers[i], centers[j]
            ax.plot([x1, x2], [y1, y2], color="#333333", linewidth=1.2)
    if centers:
        xs = [c[0] for c in centers.values()]
        ys = [c[1] for c in centers.values()]
        ax.plot(xs, ys, "o", color="#111111", markersize=4, linestyle="none")
        for v, (x, y) in sorted(centers.items()):
            ax.annotate(str(v), (x, y), textcoords="offset points",
                        xytext=(4, 4), fontsize=9)
    ax.set_aspect("equal")
    ax.autoscale_view()
    ax.set_xlabel("x")
    ax.set_ylabel("y")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def scaling_figure(rows, fit, path: str | Path) -> None:
    """Plot benchmark mean times against disk count, one line per dmax.

    `rows` are bench.BenchRow records; `fit`, if given, is a bench.ScalingFit
    whose model curve is overlaid on the rows it was fitted to.
    """
    fig, ax = plt.subplots(figsize=(7, 5))
    by_dmax: dict[object, list] = {}
    for row in rows:
        by_dmax.setdefault(row.dmax, []).append(row)
    for dmax, group in sorted(by_dmax.items(), key=lambda kv: str(kv[0])):
        group = sorted(group, key=lambda r: r.n_disks)
        ns = [r.n_disks for r in group]
        ts = [r.mean_ms for r in group]
        label = "full" if dmax is None else f"dmax={dmax}"
        ax.plot(ns, ts, "o-", label=label)
        if fit is not None and dmax == fit.dmax:
            predicted = [
                fit.coeff_nn2 * r.n_disks * r.avg_neighbors**2
                + fit.coeff_n2 * r.n_disks**2
                for r in group
            ]
            ax.plot(ns, predicted, "--", color="#777777",
                    label=f"fit (R²={fit.r_squared:.3f})")
    ax.set_xlabel("number of disks N")
    ax.set_ylabel("mean construction time (ms)")
    ax.set_yscale("log")
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
