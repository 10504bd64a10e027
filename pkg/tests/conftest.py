"""Shared fixtures: pinned disk sets and small structural helpers."""

from __future__ import annotations

from cechcover import Disk, DiskSet, SimplicialComplex, Tolerance, disks_intersect


# ── Pinned disk sets ─────────────────────────────────────────────
# Three equal disks whose union encloses a hole: pairwise intersecting,
# no common point.
HOLE_TRIAD = DiskSet((
    Disk.of(0, 0.0, 0.0, 0.485),
    Disk.of(1, 0.9, 0.0, 0.485),
    Disk.of(2, 0.45, 0.8, 0.485),
))

_FIVE_CENTERS = ((0.0, 1.05), (-0.1, 0.15), (0.6, 0.0), (1.2, 0.2), (0.9, 0.9))


def _five(radii) -> DiskSet:
    return DiskSet(tuple(
        Disk.of(i, x, y, r)
        for i, ((x, y), r) in enumerate(zip(_FIVE_CENTERS, radii))
    ))


# Five disks with one filled tetrahedron {0,1,2,4} plus triangle {2,3,4}.
FIVE_SOLID = _five((0.8, 0.6, 0.6, 0.5, 0.8))
# Same centers, disk 0 shrunk: the tetrahedron dissolves, no hole yet.
FIVE_COVERED = _five((0.5, 0.6, 0.6, 0.5, 0.8))
# Disk 4 also shrunk: a coverage hole opens in the middle.
FIVE_HOLE = _five((0.5, 0.6, 0.6, 0.5, 0.5))

# Four disks where the smallest is contained in all others (Case 1).
CASE1 = DiskSet((
    Disk.of(0, 1.0, 2.3, 0.3),
    Disk.of(1, 0.5, 1.8, 1.1),
    Disk.of(2, 1.2, 1.5, 1.2),
    Disk.of(3, 1.5, 2.0, 1.0),
))
# Four disks sharing a point only via a pair's circle intersection (Case 2).
CASE2 = DiskSet((
    Disk.of(0, 1.0, 2.3, 0.5),
    Disk.of(1, 0.5, 1.8, 0.65),
    Disk.of(2, 1.2, 1.5, 0.5),
    Disk.of(3, 1.5, 2.0, 0.5),
))
# Four disks with no common point (and disks 0, 2 disjoint outright).
CASE_NONE = DiskSet((
    Disk.of(0, 1.0, 2.3, 0.35),
    Disk.of(1, 0.5, 1.8, 0.6),
    Disk.of(2, 1.2, 1.5, 0.35),
    Disk.of(3, 1.5, 2.0, 0.5),
))


# ── Structural helpers ───────────────────────────────────────────


def assert_face_closed(cx: SimplicialComplex) -> None:
    """Every (k-1)-face of every k-simplex must be present one level down."""
    for k in range(1, len(cx.levels)):
        lower = set(cx.levels[k - 1])
        for simplex in cx.levels[k]:
            for drop in range(len(simplex)):
                face = simplex[:drop] + simplex[drop + 1:]
                assert face in lower, f"face {face} of {simplex} missing at level {k - 1}"


def pairwise_intersecting_instance(rng, n: int) -> DiskSet:
    """Random n disks in a 2x2 box, radii 0.5..1, resampled until every
    pair intersects."""
    import random as _random

    assert isinstance(rng, _random.Random)
    while True:
        disks = tuple(
            Disk.of(i, rng.uniform(0, 2), rng.uniform(0, 2), rng.uniform(0.5, 1.0))
            for i in range(n)
        )
        ds = DiskSet(disks)
        if all(
            disks_intersect(ds[i], ds[j])
            for i in range(n)
            for j in range(i + 1, n)
        ):
            return ds


def component_count(ds: DiskSet, tol: Tolerance | None = None) -> int:
    """Connected components of the intersection graph via union-find."""
    kwargs = {} if tol is None else {"tol": tol}
    parent = list(range(len(ds)))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for i in range(len(ds)):
        for j in range(i + 1, len(ds)):
            if disks_intersect(ds[i], ds[j], **kwargs):
                parent[find(i)] = find(j)
    return len({find(i) for i in range(len(ds))})
