"""Generalized Cech complex and Rips (clique) complex construction.

A k-simplex of the Cech complex is a set of k+1 disks with a common point.
Level k is built from level k-1: every candidate is a verified (k-1)-simplex
extended by one higher-id vertex adjacent to all of it, so each subset is
examined exactly once and the output is independent of input order.

Candidate verification distinguishes two geometric cases: either the
smallest-radius disk lies inside every other candidate disk, or some pairwise
boundary crossing point lies inside all remaining candidate disks.  If
neither holds, the disks have no common point.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Iterator

from .geometry import (
    DEFAULT_TOLERANCE,
    Disk,
    Tolerance,
    _circle_points_raw,
)

Simplex = tuple[int, ...]

CECH = "cech"
RIPS = "rips"


class LevelNotBuiltError(LookupError):
    """A level beyond the constructed dimension cap was requested."""


class NotPairwiseAdjacentError(ValueError):
    """Candidate verification requires every vertex pair to intersect."""


@dataclass(frozen=True)
class DiskSet:
    """Disks indexed by vertex id; ids must be exactly 0..N-1."""

    disks: tuple[Disk, ...]

    def __init__(self, disks):
        disks = tuple(sorted(disks, key=lambda d: d.id))
        ids = [d.id for d in disks]
        if ids != list(range(len(disks))):
            raise ValueError(f"disk ids must be exactly 0..N-1, got {ids}")
        object.__setattr__(self, "disks", disks)

    def __len__(self) -> int:
        return len(self.disks)

    def __iter__(self):
        return iter(self.disks)

    def __getitem__(self, vid: int) -> Disk:
        return self.disks[vid]


@dataclass(frozen=True)
class SimplicialComplex:
    """Simplices grouped by dimension, plus the vertex adjacency from level 1.

    levels[k] holds the k-simplices in lexicographic order.  `complete` is
    True when construction stopped because a level came out empty, in which
    case every higher level is known to be empty; otherwise the build was
    truncated at the `dmax` cap and higher levels are unknown.
    """

    levels: tuple[tuple[Simplex, ...], ...]
    neighbors: tuple[tuple[int, ...], ...]
    dmax: int | None
    kind: str = CECH
    complete: bool = False

    @property
    def n_vertices(self) -> int:
        return len(self.levels[0])

    @property
    def top_dimension(self) -> int:
        """Highest dimension with at least one simplex."""
        for k in range(len(self.levels) - 1, -1, -1):
            if self.levels[k]:
                return k
        return -1

    def level(self, k: int) -> tuple[Simplex, ...]:
        """k-simplices; empty for unbuilt levels of a complete complex."""
        if k < 0:
            raise LevelNotBuiltError(f"no level {k}")
        if k < len(self.levels):
            return self.levels[k]
        if self.complete:
            return ()
        raise LevelNotBuiltError(
            f"level {k} was not built (construction capped at dmax={self.dmax})"
        )

    def level_sizes(self) -> tuple[int, ...]:
        return tuple(len(lv) for lv in self.levels)

    def __contains__(self, simplex) -> bool:
        s = tuple(simplex)
        k = len(s) - 1
        if not 0 <= k < len(self.levels):
            return False
        return s in set(self.levels[k])


def build_one_simplices(ds: DiskSet, tol: Tolerance = DEFAULT_TOLERANCE) -> tuple[Simplex, ...]:
    """All intersecting pairs (i, j), i < j, in lexicographic order.

    Scans disks in x order so the inner loop can stop once the horizontal
    gap alone exceeds any possible radius sum; the intersection predicate
    itself is unchanged, the sweep only skips pairs it must reject.
    """
    disks = ds.disks
    n = len(disks)
    if n < 2:
        return ()
    eps = tol.eps
    xs = [d.center.x for d in disks]
    ys = [d.center.y for d in disks]
    rs = [d.radius for d in disks]
    rmax = max(rs)
    order = sorted(range(n), key=lambda v: (xs[v], v))
    pairs: list[Simplex] = []
    append = pairs.append
    for pos in range(n - 1):
        i = order[pos]
        xi, yi, ri = xs[i], ys[i], rs[i]
        # Same association as `reach` below so bound >= reach for every j.
        bound = ri + rmax + eps
        for pos2 in range(pos + 1, n):
            j = order[pos2]
            dx = xs[j] - xi
            if dx > bound:
                break
            dy = ys[j] - yi
            reach = ri + rs[j] + eps
            if dx * dx + dy * dy <= reach * reach:
                append((i, j) if i < j else (j, i))
    pairs.sort()
    return tuple(pairs)


class _PairGeometry:
    """Flattened centers and radii for candidate verification.

    Crossing points of a disk pair are recomputed per candidate: a candidate
    usually succeeds on its first pair, so most pairs are never touched and
    the decision stays allocation-free apart from the points themselves.
    A coincident pair contributes no crossing points; that is sound for the
    common-point decision because coincident disks are mutually containing
    and any third disk sees identical constraints from either one.
    """

    def __init__(self, ds: DiskSet, tol: Tolerance):
        self.xs = [d.center.x for d in ds.disks]
        self.ys = [d.center.y for d in ds.disks]
        self.rs = [d.radius for d in ds.disks]
        self.eps = tol.eps

    def has_common_point(self, verts: Simplex) -> bool:
        """Two-case decision for 'do these disks share a point?'."""
        xs, ys, rs, eps = self.xs, self.ys, self.rs, self.eps

        if len(verts) == 3:
            return self._triangle(verts)

        smallest = verts[0]
        for v in verts[1:]:
            if rs[v] < rs[smallest]:
                smallest = v

        # Case 1: the smallest disk sits inside every other candidate disk.
        xi, yi, ri = xs[smallest], ys[smallest], rs[smallest]
        inside_all = True
        for v in verts:
            if v == smallest:
                continue
            slack = rs[v] - ri + eps
            if slack < 0:
                inside_all = False
                break
            dx = xi - xs[v]
            dy = yi - ys[v]
            if dx * dx + dy * dy > slack * slack:
                inside_all = False
                break
        if inside_all:
            return True

        # Case 2: some pairwise crossing point lies inside all other disks.
        m = len(verts)
        for a in range(m - 1):
            i = verts[a]
            for b in range(a + 1, m):
                j = verts[b]
                pts = _circle_points_raw(
                    xs[i], ys[i], rs[i], xs[j], ys[j], rs[j], eps,
                )
                if not pts:
                    continue
                for px, py in pts:
                    ok = True
                    for v in verts:
                        if v == i or v == j:
                            continue
                        reach = rs[v] + eps
                        dx = px - xs[v]
                        dy = py - ys[v]
                        if dx * dx + dy * dy > reach * reach:
                            ok = False
                            break
                    if ok:
                        return True
        return False

    def _triangle(self, verts: Simplex) -> bool:
        """has_common_point specialized for the hottest case, three disks.

        Same arithmetic and pair order as the generic path, with the loops
        unrolled; a property test pins the two paths to identical answers.
        """
        xs, ys, rs, eps = self.xs, self.ys, self.rs, self.eps
        i, j, k = verts
        xi, yi, ri = xs[i], ys[i], rs[i]
        xj, yj, rj = xs[j], ys[j], rs[j]
        xk, yk, rk = xs[k], ys[k], rs[k]

        # Case 1 with the smallest disk chosen as the generic path does
        # (minimum radius, ties to the lowest id).
        if ri <= rj and ri <= rk:
            xa, ya, ra, others = xi, yi, ri, ((xj, yj, rj), (xk, yk, rk))
        elif rj <= rk:
            xa, ya, ra, others = xj, yj, rj, ((xi, yi, ri), (xk, yk, rk))
        else:
            xa, ya, ra, others = xk, yk, rk, ((xi, yi, ri), (xj, yj, rj))
        inside_all = True
        for xo, yo, ro in others:
            slack = ro - ra + eps
            if slack < 0:
                inside_all = False
                break
            dx = xa - xo
            dy = ya - yo
            if dx * dx + dy * dy > slack * slack:
                inside_all = False
                break
        if inside_all:
            return True

        # Case 2: each pair's crossing points against the remaining disk.
        # The point math mirrors _circle_points_raw exactly (pinned by a
        # property test); a None result (coincident pair) contributes none.
        sqrt = math.sqrt
        for x1, y1, r1, x2, y2, r2, xo, yo, ro in (
            (xi, yi, ri, xj, yj, rj, xk, yk, rk),
            (xi, yi, ri, xk, yk, rk, xj, yj, rj),
            (xj, yj, rj, xk, yk, rk, xi, yi, ri),
        ):
            dx = x2 - x1
            dy = y2 - y1
            d2 = dx * dx + dy * dy
            rsum = r1 + r2
            rdiff = abs(r1 - r2)
            if d2 <= eps * eps and rdiff <= eps:
                continue
            hi = rsum + eps
            if d2 > hi * hi:
                continue
            lo = rdiff - eps
            if lo > 0 and d2 < lo * lo:
                continue
            d = sqrt(d2)
            a_len = (r1 * r1 - r2 * r2 + d2) / (2.0 * d)
            ux = dx / d
            uy = dy / d
            mx = x1 + a_len * ux
            my = y1 + a_len * uy
            reach = ro + eps
            if abs(d - rsum) <= eps or abs(d - rdiff) <= eps:
                px = mx - xo
                py = my - yo
                if px * px + py * py <= reach * reach:
                    return True
                continue
            h2 = r1 * r1 - a_len * a_len
            h = sqrt(h2) if h2 > 0 else 0.0
            hx = h * uy
            hy = h * ux
            px = mx + hx - xo
            py = my - hy - yo
            if px * px + py * py <= reach * reach:
                return True
            px = mx - hx - xo
            py = my + hy - yo
            if px * px + py * py <= reach * reach:
                return True
        return False


def verify_candidate(
    ds: DiskSet,
    candidate: Simplex,
    tol: Tolerance = DEFAULT_TOLERANCE,
    require_adjacency: bool = False,
) -> bool:
    """Decide whether the candidate's disks share a common point.

    The candidate must have dimension >= 2, strictly increasing vertices,
    all in range.  A candidate containing a non-intersecting pair cannot
    share a point (both decision cases fail for it), so it returns False;
    pass require_adjacency=True to treat that as a contract violation and
    raise NotPairwiseAdjacentError naming the offending pair instead.
    """
    verts = tuple(candidate)
    if len(verts) < 3:
        raise ValueError(f"candidate must have dimension >= 2, got {verts}")
    if list(verts) != sorted(set(verts)):
        raise ValueError(f"candidate vertices must be strictly increasing, got {verts}")
    if verts[-1] >= len(ds):
        raise ValueError(f"candidate vertex {verts[-1]} out of range for {len(ds)} disks")

    geo = _PairGeometry(ds, tol)
    eps = tol.eps
    for a in range(len(verts) - 1):
        i = verts[a]
        for b in range(a + 1, len(verts)):
            j = verts[b]
            dx = geo.xs[i] - geo.xs[j]
            dy = geo.ys[i] - geo.ys[j]
            reach = geo.rs[i] + geo.rs[j] + eps
            if dx * dx + dy * dy > reach * reach:
                if require_adjacency:
                    raise NotPairwiseAdjacentError(
                        f"pair ({i}, {j}) of candidate {verts} does not intersect"
                    )
                return False
    return geo.has_common_point(verts)


def _neighbors_from_pairs(n: int, pairs: tuple[Simplex, ...]) -> tuple[tuple[int, ...], ...]:
    adj: list[list[int]] = [[] for _ in range(n)]
    for i, j in pairs:
        adj[i].append(j)
        adj[j].append(i)
    return tuple(tuple(sorted(a)) for a in adj)


def _adjacency_masks(neighbors: tuple[tuple[int, ...], ...]) -> list[int]:
    """Per-vertex adjacency encoded as an integer bitmask."""
    masks = []
    for adj in neighbors:
        m = 0
        for v in adj:
            m |= 1 << v
        masks.append(m)
    return masks


def _extensions_list(
    prev_level: tuple[Simplex, ...],
    prev_set: set[Simplex] | None,
    masks: list[int],
) -> list[Simplex]:
    """Candidates for the next level, each exactly once, in lexicographic order.

    A candidate is a previous-level simplex extended by a common neighbor
    above its maximum, kept only if every face of the extension is a
    previous-level simplex.  prev_set=None skips the face test for the case
    where the previous level is known to hold every clique (then adjacency
    alone already implies face closure).
    """
    out: list[Simplex] = []
    append = out.append
    for simplex in prev_level:
        common = masks[simplex[0]]
        for u in simplex[1:]:
            common &= masks[u]
        last = simplex[-1]
        common >>= last + 1
        base = last + 1
        while common:
            low = common & -common
            common ^= low
            v = base + low.bit_length() - 1
            if prev_set is not None:
                ok = True
                for drop in range(len(simplex)):
                    face = simplex[:drop] + simplex[drop + 1:] + (v,)
                    if face not in prev_set:
                        ok = False
                        break
                if not ok:
                    continue
            append(simplex + (v,))
    return out


def enumerate_candidates(cx: SimplicialComplex, k: int) -> Iterator[Simplex]:
    """Stream the k-dimensional candidates implied by levels 0..k-1 of cx."""
    if k < 2:
        raise ValueError(f"candidates are defined for dimension >= 2, got {k}")
    prev = cx.level(k - 1)
    return iter(_extensions_list(prev, set(prev), _adjacency_masks(cx.neighbors)))


def _build(
    ds: DiskSet,
    dmax: int | None,
    tol: Tolerance,
    accept: Callable[[Simplex], bool],
    kind: str,
    threads: int = 1,
) -> SimplicialComplex:
    if dmax is not None and dmax < 1:
        raise ValueError(f"dmax must be >= 1 (or None for uncapped), got {dmax}")

    n = len(ds)
    levels: list[tuple[Simplex, ...]] = [tuple((v,) for v in range(n))]
    pairs = build_one_simplices(ds, tol)
    levels.append(pairs)
    neighbors = _neighbors_from_pairs(n, pairs)
    masks = _adjacency_masks(neighbors)

    # A level that keeps every candidate (Rips) consists of all cliques, so
    # its extensions are face-closed by construction and skip the face test.
    # Level 2 skips it in every build: level 1 holds all intersecting pairs,
    # so a triangle's faces are present whenever its vertices are adjacent.
    prune_faces = kind == CECH

    k = 2
    while levels[-1] and (dmax is None or k <= dmax):
        prev = levels[-1]
        need_faces = prune_faces and k >= 3
        candidates = _extensions_list(prev, set(prev) if need_faces else None, masks)
        if threads > 1:
            level_k = _filter_parallel(candidates, accept, threads)
        else:
            level_k = tuple(filter(accept, candidates))
        levels.append(level_k)
        k += 1

    complete = dmax is None or not levels[-1]
    return SimplicialComplex(
        levels=tuple(levels),
        neighbors=neighbors,
        dmax=dmax,
        kind=kind,
        complete=complete,
    )


def _filter_parallel(candidates, accept, threads: int) -> tuple[Simplex, ...]:
    """Verify candidates on a thread pool, preserving candidate order.

    Verification is pure, so the merged result is identical to the
    single-threaded one (CPython's GIL limits the speedup, but the knob
    keeps the contract: bit-stable output at any thread count).
    """
    from concurrent.futures import ThreadPoolExecutor

    batch = list(candidates)
    if not batch:
        return ()
    with ThreadPoolExecutor(max_workers=threads) as pool:
        keep = list(pool.map(accept, batch, chunksize=max(1, len(batch) // threads)))
    return tuple(c for c, ok in zip(batch, keep) if ok)


def build_cech(
    ds: DiskSet,
    dmax: int | None = 2,
    tol: Tolerance = DEFAULT_TOLERANCE,
    threads: int = 1,
) -> SimplicialComplex:
    """Build the generalized Cech complex of the disks up to dimension dmax.

    dmax=None removes the cap: construction runs until a level comes out
    empty, which always happens at or below dimension N-1.
    """
    geo = _PairGeometry(ds, tol)
    return _build(ds, dmax, tol, geo.has_common_point, CECH, threads)


def build_rips(
    ds: DiskSet,
    dmax: int | None = 2,
    tol: Tolerance = DEFAULT_TOLERANCE,
    threads: int = 1,
) -> SimplicialComplex:
    """Build the Rips (clique) complex of the disk intersection graph."""
    return _build(ds, dmax, tol, lambda _s: True, RIPS, threads)
