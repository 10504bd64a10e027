"""Construction-time benchmark sweep and the polynomial scaling fit.

Timing wraps construction only (no I/O, no homology), wall clock via
time.perf_counter.  Each density reuses one generated scenario across all
dmax values so ratios between caps compare like against like; the scenario
seed for density index i is seed + i.
"""

from __future__ import annotations

import statistics
import time
from dataclasses import dataclass

import numpy as np

from .complexes import build_cech
from .geometry import DEFAULT_TOLERANCE, Tolerance
from .scenario import ScenarioConfig, generate_scenario


@dataclass(frozen=True)
class BenchRow:
    """One sweep cell: a (density, dmax) pair timed over `repeats` builds."""

    density: float
    dmax: int | None
    n_disks: int
    avg_neighbors: float
    mean_ms: float
    std_ms: float


CSV_HEADER = "density,dmax,n_disks,avg_neighbors,mean_ms,std_ms"


def benchmark(
    densities: list[float],
    dmaxes: list[int | None],
    repeats: int = 3,
    seed: int = 0,
    width: float = 6.0,
    height: float = 6.0,
    radius_min: float = 0.5,
    radius_max: float = 1.0,
    tol: Tolerance = DEFAULT_TOLERANCE,
) -> list[BenchRow]:
    """Time build_cech over the density x dmax grid; repeats=0 yields no rows."""
    if repeats < 0:
        raise ValueError(f"repeats must be >= 0, got {repeats}")
    rows: list[BenchRow] = []
    if repeats == 0:
        return rows
    for i, density in enumerate(densities):
        cfg = ScenarioConfig(
            density=density,
            width=width,
            height=height,
            radius_min=radius_min,
            radius_max=radius_max,
            seed=seed + i,
        )
        ds = generate_scenario(cfg)
        for dmax in dmaxes:
            times = []
            cx = None
            for _ in range(repeats):
                start = time.perf_counter()
                cx = build_cech(ds, dmax=dmax, tol=tol)
                times.append((time.perf_counter() - start) * 1000.0)
            n = len(ds)
            avg_neighbors = 2.0 * len(cx.level(1)) / n if n else 0.0
            rows.append(
                BenchRow(
                    density=density,
                    dmax=dmax,
                    n_disks=n,
                    avg_neighbors=avg_neighbors,
                    mean_ms=statistics.fmean(times),
                    std_ms=statistics.pstdev(times),
                )
            )
    return rows


def rows_to_csv(rows: list[BenchRow]) -> str:
    """CSV text with header; repeats=0 sweeps give the header alone."""
    lines = [CSV_HEADER]
    for r in rows:
        dmax = "full" if r.dmax is None else str(r.dmax)
        lines.append(
            f"{r.density!r},{dmax},{r.n_disks},{r.avg_neighbors!r},"
            f"{r.mean_ms!r},{r.std_ms!r}"
        )
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class ScalingFit:
    """Least-squares fit of mean_ms to a*N*n^2 + b*N^2 with a, b >= 0.

    n is the average neighbor count 2|S1|/N.  The N*n^2 term tracks the
    per-vertex candidate enumeration cost, the N^2 term the pairwise pass.
    """

    dmax: int | None
    coeff_nn2: float
    coeff_n2: float
    r_squared: float


def fit_scaling(rows: list[BenchRow], dmax: int | None = 2) -> ScalingFit:
    """Fit the rows with the given dmax; needs at least 2 such rows.

    Plain least squares first; if a coefficient comes out negative it is
    pinned to zero and the other refitted alone, which for two variables is
    exactly the nonnegative least-squares solution.
    """
    sample = [r for r in rows if r.dmax == dmax]
    if len(sample) < 2:
        raise ValueError(
            f"need at least 2 rows with dmax={dmax} to fit, got {len(sample)}"
        )
    x1 = np.array([r.n_disks * r.avg_neighbors**2 for r in sample])
    x2 = np.array([float(r.n_disks) ** 2 for r in sample])
    t = np.array([r.mean_ms for r in sample])

    design = np.column_stack([x1, x2])
    coeffs, *_ = np.linalg.lstsq(design, t, rcond=None)
    a, b = float(coeffs[0]), float(coeffs[1])
    if a < 0 or b < 0:
        a1 = _fit_single(x1, t)
        b2 = _fit_single(x2, t)
        res1 = float(np.sum((t - a1 * x1) ** 2))
        res2 = float(np.sum((t - b2 * x2) ** 2))
        a, b = (a1, 0.0) if res1 <= res2 else (0.0, b2)

    predicted = a * x1 + b * x2
    ss_res = float(np.sum((t - predicted) ** 2))
    ss_tot = float(np.sum((t - t.mean()) ** 2))
    r2 = 1.0 - ss_res / ss_tot if ss_tot > 0 else 1.0
    return ScalingFit(dmax=dmax, coeff_nn2=a, coeff_n2=b, r_squared=r2)


def _fit_single(x: np.ndarray, t: np.ndarray) -> float:
    denom = float(np.dot(x, x))
    if denom == 0.0:
        return 0.0
    return max(0.0, float(np.dot(x, t)) / denom)
