"""End-to-end run: build a complex, compute its homology report, write outputs.

The report is fully determined by (disks, kind, dmax, eps) except for the
timing field, which wraps construction only.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass
from pathlib import Path

from .complexes import CECH, RIPS, DiskSet, SimplicialComplex, build_cech, build_rips
from .geometry import DEFAULT_TOLERANCE, Tolerance
from .homology import betti_numbers
from .io import write_complex
from .render import render_svg


@dataclass(frozen=True)
class RunReport:
    """Level sizes, Betti numbers, vertex indices, and construction timing."""

    kind: str
    dmax: int | None
    eps: float
    n_disks: int
    level_sizes: tuple[int, ...]
    betti: tuple[int, ...]
    vertex_indices: tuple[int, ...]
    vertex_index_capped: tuple[bool, ...]
    build_ms: float
    config: dict | None = None

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "dmax": self.dmax,
            "eps": self.eps,
            "n_disks": self.n_disks,
            "level_sizes": list(self.level_sizes),
            "betti": list(self.betti),
            "vertex_indices": list(self.vertex_indices),
            "vertex_index_capped": list(self.vertex_index_capped),
            "build_ms": self.build_ms,
            "config": self.config,
        }


def run(
    ds: DiskSet,
    kind: str = CECH,
    dmax: int | None = 2,
    tol: Tolerance = DEFAULT_TOLERANCE,
    threads: int = 1,
    out_complex: str | Path | None = None,
    out_report: str | Path | None = None,
    out_svg: str | Path | None = None,
    out_fig: str | Path | None = None,
    config: dict | None = None,
) -> RunReport:
    """Build, analyze, and optionally persist complex/report/figures.

    Betti numbers are reported for k <= dmax-1 (the highest rank a capped
    build supports); uncapped builds report up to the realized top dimension.
    """
    builder = {CECH: build_cech, RIPS: build_rips}.get(kind)
    if builder is None:
        raise ValueError(f"kind must be {CECH!r} or {RIPS!r}, got {kind!r}")

    start = time.perf_counter()
    cx = builder(ds, dmax=dmax, tol=tol, threads=threads)
    build_ms = (time.perf_counter() - start) * 1000.0

    up_to = dmax - 1 if dmax is not None else max(1, cx.top_dimension)
    report_data = betti_numbers(cx, up_to)
    report = RunReport(
        kind=kind,
        dmax=dmax,
        eps=tol.eps,
        n_disks=len(ds),
        level_sizes=report_data.level_sizes,
        betti=report_data.betti,
        vertex_indices=report_data.vertex_indices,
        vertex_index_capped=report_data.vertex_index_capped,
        build_ms=build_ms,
        config=config,
    )

    if out_complex is not None:
        write_complex(cx, out_complex)
    if out_report is not None:
        Path(out_report).write_text(json.dumps(report.to_dict(), indent=2) + "\n")
    if out_svg is not None:
        render_svg(ds, cx, out_svg)
    if out_fig is not None:
        from .figures import complex_figure

        complex_figure(ds, cx, out_fig)
    return report
