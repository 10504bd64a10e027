"""Deterministic SVG pictures of a disk set and its complex.

Pure string assembly: coordinates are formatted with a fixed "%.2f" at 100
pixels per plane unit, elements are emitted in a fixed order (disks, filled
simplices by ascending dimension, edges, vertices, labels), and iteration
follows the lexicographic level order of the complex.  The same inputs
therefore always produce the same bytes.  Higher-dimensional simplices are
filled darker, so coverage holes show as white gaps between shaded faces.
"""

from __future__ import annotations

import math
from pathlib import Path

from .complexes import DiskSet, SimplicialComplex

_SCALE = 100.0  # pixels per plane unit
_MARGIN = 0.25  # plane units of padding around the disk union

_DISK_FILL = "#4a90d9"
_DISK_STROKE = "#1f5fa8"
_EDGE_STROKE = "#333333"
_VERTEX_FILL = "#111111"
_FACE_FILL = "#2c6fbb"


def _fmt(value: float) -> str:
    return "%.2f" % value


def _face_opacity(dimension: int) -> float:
    """Fill opacity for a filled simplex; darker as dimension grows."""
    return min(0.85, 0.30 + 0.18 * (dimension - 2))


def render_svg(ds: DiskSet, cx: SimplicialComplex, path: str | Path) -> None:
    """Write one SVG showing disks, vertices, edges, and filled faces."""
    Path(path).write_text(render_svg_text(ds, cx))


def render_svg_text(ds: DiskSet, cx: SimplicialComplex) -> str:
    """The SVG document as a string; see module docstring for determinism."""
    if len(ds) > 0:
        min_x = min(d.center.x - d.radius for d in ds) - _MARGIN
        max_x = max(d.center.x + d.radius for d in ds) + _MARGIN
        min_y = min(d.center.y - d.radius for d in ds) - _MARGIN
        max_y = max(d.center.y + d.radius for d in ds) + _MARGIN
    else:
        min_x, max_x, min_y, max_y = 0.0, 1.0, 0.0, 1.0
    width = (max_x - min_x) * _SCALE
    height = (max_y - min_y) * _SCALE

    def to_px(x: float, y: float) -> tuple[float, float]:
        # SVG y grows downward; flip so the plane reads the usual way up.
        return (x - min_x) * _SCALE, (max_y - y) * _SCALE

    parts = [
        '<svg xmlns="http://www.w3.org/2000/svg" '
        f'width="{_fmt(width)}" height="{_fmt(height)}" '
        f'viewBox="0 0 {_fmt(width)} {_fmt(height)}">',
        f'<rect width="{_fmt(width)}" height="{_fmt(height)}" fill="#ffffff"/>',
    ]

    for d in ds:
        px, py = to_px(d.center.x, d.center.y)
        parts.append(
            f'<circle cx="{_fmt(px)}" cy="{_fmt(py)}" r="{_fmt(d.radius * _SCALE)}" '
            f'fill="{_DISK_FILL}" fill-opacity="0.15" '
            f'stroke="{_DISK_STROKE}" stroke-width="1"/>'
        )

    centers = {d.id: (d.center.x, d.center.y) for d in ds}
    for k in range(2, len(cx.levels)):
        opacity = _face_opacity(k)
        for simplex in cx.levels[k]:
            pts = [centers[v] for v in simplex]
            hx = sum(p[0] for p in pts) / len(pts)
            hy = sum(p[1] for p in pts) / len(pts)
            # Order polygon corners around the centroid so the outline of a
            # higher simplex is drawn as one simple polygon.
            ordered = sorted(pts, key=lambda p: math.atan2(p[1] - hy, p[0] - hx))
            coords = " ".join(
                "%s,%s" % (_fmt(px), _fmt(py))
                for px, py in (to_px(x, y) for x, y in ordered)
            )
            parts.append(
                f'<polygon points="{coords}" fill="{_FACE_FILL}" '
                f'fill-opacity="{_fmt(opacity)}" stroke="none"/>'
            )

    if len(cx.levels) > 1:
        for i, j in cx.levels[1]:
            x1, y1 = to_px(*centers[i])
            x2, y2 = to_px(*centers[j])
            parts.append(
                f'<line x1="{_fmt(x1)}" y1="{_fmt(y1)}" '
                f'x2="{_fmt(x2)}" y2="{_fmt(y2)}" '
                f'stroke="{_EDGE_STROKE}" stroke-width="1.5"/>'
            )

    for d in ds:
        px, py = to_px(d.center.x, d.center.y)
        parts.append(
            f'<circle cx="{_fmt(px)}" cy="{_fmt(py)}" r="3" fill="{_VERTEX_FILL}"/>'
        )
        parts.append(
            f'<text x="{_fmt(px + 5)}" y="{_fmt(py - 5)}" '
            f'font-family="sans-serif" font-size="12" fill="#222222">{d.id}</text>'
        )

    parts.append("</svg>")
    return "\n".join(parts) + "\n"
