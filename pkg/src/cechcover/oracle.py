"""Brute-force ground truth for "do these disks share a common point?".

Deliberately independent of the constructive intersection test: no circle
intersection points, no containment case analysis.  The only facts used are
that f(p) = max_i (dist(p, c_i) - r_i) is 1-Lipschitz, and that any common
point lies inside the smallest disk.  A sample with f <= 0 proves "yes"; a
covering of the smallest disk's bounding box by cells whose Lipschitz lower
bound is positive proves "no".
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .complexes import Simplex, SimplicialComplex
from .geometry import DEFAULT_TOLERANCE, Disk, Tolerance, disks_intersect

YES = "yes"
NO = "no"
INCONCLUSIVE = "inconclusive"

# Farthest any point of a square cell lies from its center, per unit side.
_HALF_DIAGONAL = math.sqrt(2.0) / 2.0


@dataclass(frozen=True)
class OracleVerdict:
    """Decision plus the slack of the best sample point.

    margin is -min(f) over all sampled points: positive when a common point
    was found with room to spare, negative when even the best sample misses.
    decision is "inconclusive" only when |margin| is within the guard band.
    """

    decision: str
    margin: float


def _f_values(px: np.ndarray, py: np.ndarray, disks: list[Disk]) -> np.ndarray:
    """f(p) = max over disks of (distance to center - radius), vectorized."""
    out: np.ndarray | None = None
    for d in disks:
        dist = np.hypot(px - d.center.x, py - d.center.y) - d.radius
        out = dist if out is None else np.maximum(out, dist, out=out)
    assert out is not None
    return out


def common_point_exists(disks: list[Disk], resolution: float = 1e-3) -> OracleVerdict:
    """Decide whether all disks share a point, by grid search plus refinement.

    The bounding box of the smallest disk is tiled by square cells of side
    <= resolution and f is evaluated at every center.  Cells that might
    still contain a zero of f (center value within half a cell diagonal of
    zero) are split 2x2 until the side drops below resolution/100.  The
    guard band is twice that final cell size, so 2e-5 plane units at the
    default resolution.

    Verdicts: "yes" whenever some sample has f <= 0 (exhibited point, always
    sound); "no" when every cell was pruned with a positive lower bound and
    the best sample exceeds the guard (min f > 0 is then proven); otherwise
    "inconclusive", which can only happen with |margin| within the guard.
    """
    if len(disks) < 2:
        raise ValueError(f"need at least 2 disks, got {len(disks)}")
    if not (resolution > 0 and math.isfinite(resolution)):
        raise ValueError(f"resolution must be positive and finite, got {resolution}")

    smallest = min(disks, key=lambda d: d.radius)
    r = smallest.radius
    n = max(1, math.ceil(2.0 * r / resolution))
    side = 2.0 * r / n
    coords = smallest.center.x - r + (np.arange(n) + 0.5) * side
    rows = smallest.center.y - r + (np.arange(n) + 0.5) * side
    gx, gy = np.meshgrid(coords, rows)
    px = gx.ravel()
    py = gy.ravel()

    final_side = resolution / 100.0
    guard = 2.0 * final_side

    f = _f_values(px, py, disks)
    best = float(f.min())
    if best <= 0.0:
        return OracleVerdict(YES, -best)

    keep = f <= _HALF_DIAGONAL * side
    px, py = px[keep], py[keep]
    while side > final_side and px.size:
        side *= 0.5
        off = side / 2.0
        px = np.concatenate([px - off, px + off, px - off, px + off])
        py = np.concatenate([py - off, py - off, py + off, py + off])
        f = _f_values(px, py, disks)
        level_best = float(f.min())
        if level_best < best:
            best = level_best
        if best <= 0.0:
            return OracleVerdict(YES, -best)
        keep = f <= _HALF_DIAGONAL * side
        px, py = px[keep], py[keep]

    if px.size == 0 and best > guard:
        # Every cell, at some size s, had f(center) > s * sqrt(2)/2, so f is
        # positive on the whole search box and no common point exists.
        return OracleVerdict(NO, -best)
    return OracleVerdict(INCONCLUSIVE, -best)


@dataclass(frozen=True)
class Disagreement:
    """A candidate on which complex membership and the oracle conflict."""

    candidate: Simplex
    in_complex: bool
    verdict: OracleVerdict


def _cliques(ds, tol: Tolerance, max_size: int | None) -> list[Simplex]:
    """All cliques of the pairwise-intersection graph, sizes 2..max_size."""
    n = len(ds)
    adjacent: list[set[int]] = [set() for _ in range(n)]
    pairs: list[Simplex] = []
    for i in range(n):
        for j in range(i + 1, n):
            if disks_intersect(ds[i], ds[j], tol):
                adjacent[i].add(j)
                adjacent[j].add(i)
                pairs.append((i, j))

    out: list[Simplex] = list(pairs)
    current = pairs
    size = 2
    while current and (max_size is None or size < max_size):
        grown: list[Simplex] = []
        for clique in current:
            last = clique[-1]
            for v in sorted(adjacent[last]):
                if v > last and all(v in adjacent[u] for u in clique[:-1]):
                    grown.append(clique + (v,))
        out.extend(grown)
        current = grown
        size += 1
    return out


def cross_check(
    ds,
    cx: SimplicialComplex,
    resolution: float = 1e-3,
    tol: Tolerance = DEFAULT_TOLERANCE,
) -> list[Disagreement]:
    """Compare cx's membership against the oracle on every candidate.

    Candidates are all cliques of the (independently recomputed) pairwise
    intersection graph up to cx's dimension cap, plus every simplex cx
    actually contains.  Inconclusive oracle verdicts are skipped; anything
    else that disagrees with membership is returned.  Expected empty for a
    correctly built complex.
    """
    if len(ds) == 0:
        return []
    max_size = None if cx.dmax is None else cx.dmax + 1
    candidates = set(_cliques(ds, tol, max_size))
    for level in cx.levels[1:]:
        candidates.update(level)
    level_sets = [set(level) for level in cx.levels]

    disagreements: list[Disagreement] = []
    for cand in sorted(candidates, key=lambda c: (len(c), c)):
        k = len(cand) - 1
        member = k < len(level_sets) and cand in level_sets[k]
        verdict = common_point_exists([ds[v] for v in cand], resolution)
        if (verdict.decision == YES and not member) or (
            verdict.decision == NO and member
        ):
            disagreements.append(Disagreement(cand, member, verdict))
    return disagreements
