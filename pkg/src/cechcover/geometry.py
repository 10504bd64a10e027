"""Planar disk primitives: intersection tests, containment, circle crossing points.

Every predicate compares closed disks under one shared absolute tolerance on
(non-squared) distances, so tangency counts as intersection.  Internally the
comparisons are done on squared quantities whenever the threshold is known to
be non-negative, which avoids square roots without changing the outcome.
"""

from __future__ import annotations

import math
from dataclasses import dataclass


class CoincidentCirclesError(ValueError):
    """Two circles share center and radius (within tolerance): their boundary
    intersection is a whole circle, not a finite point set."""


@dataclass(frozen=True)
class Point:
    x: float
    y: float

    def __post_init__(self):
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise ValueError(f"Point coordinates must be finite, got ({self.x}, {self.y})")

    def distance_to(self, other: Point) -> float:
        return math.hypot(self.x - other.x, self.y - other.y)


@dataclass(frozen=True)
class Disk:
    """A cell: vertex label, center and coverage radius."""

    id: int
    center: Point
    radius: float

    def __post_init__(self):
        if self.id < 0 or self.id != int(self.id):
            raise ValueError(f"Disk id must be a non-negative integer, got {self.id}")
        if not (math.isfinite(self.radius) and self.radius > 0):
            raise ValueError(f"Disk radius must be finite and > 0, got {self.radius}")

    @classmethod
    def of(cls, id: int, x: float, y: float, r: float) -> Disk:
        return cls(id, Point(x, y), r)


@dataclass(frozen=True)
class Tolerance:
    """Absolute slack added to the right-hand side of every distance comparison.

    The default of 1e-9 plane units makes all predicates closed-disk: exact
    tangency and exact containment are classified as intersecting/contained.
    """

    eps: float = 1e-9

    def __post_init__(self):
        if not (math.isfinite(self.eps) and self.eps >= 0):
            raise ValueError(f"Tolerance eps must be finite and >= 0, got {self.eps}")


DEFAULT_TOLERANCE = Tolerance()


def disks_intersect(a: Disk, b: Disk, tol: Tolerance = DEFAULT_TOLERANCE) -> bool:
    """True iff the closed disks overlap: dist(centers) <= r_a + r_b + eps."""
    dx = a.center.x - b.center.x
    dy = a.center.y - b.center.y
    reach = a.radius + b.radius + tol.eps
    return dx * dx + dy * dy <= reach * reach


def disk_inside_disk(inner: Disk, outer: Disk, tol: Tolerance = DEFAULT_TOLERANCE) -> bool:
    """True iff `inner` lies within `outer`: dist(centers) + r_in <= r_out + eps."""
    slack = outer.radius - inner.radius + tol.eps
    if slack < 0:
        return False
    dx = inner.center.x - outer.center.x
    dy = inner.center.y - outer.center.y
    return dx * dx + dy * dy <= slack * slack


def point_in_disk(p: Point, d: Disk, tol: Tolerance = DEFAULT_TOLERANCE) -> bool:
    """True iff p lies in the closed disk: dist(p, center) <= r + eps."""
    dx = p.x - d.center.x
    dy = p.y - d.center.y
    reach = d.radius + tol.eps
    return dx * dx + dy * dy <= reach * reach


def _circle_points_raw(
    xa: float, ya: float, ra: float,
    xb: float, yb: float, rb: float,
    eps: float,
) -> tuple[tuple[float, float], ...] | None:
    """Boundary intersection of two circles, on raw floats.

    Returns a tuple of 0, 1 or 2 (x, y) points, or None when the circles are
    coincident (same center and radius within eps).  Tangency — external or
    internal, within eps of exact — yields the single foot point on the line
    of centers rather than two coincident points.
    """
    dx = xb - xa
    dy = yb - ya
    d2 = dx * dx + dy * dy
    rsum = ra + rb
    rdiff = abs(ra - rb)

    if d2 <= eps * eps and rdiff <= eps:
        return None
    hi = rsum + eps
    if d2 > hi * hi:
        return ()
    lo = rdiff - eps
    if lo > 0 and d2 < lo * lo:
        return ()

    d = math.sqrt(d2)
    # Distance from center a to the chord (or tangency) foot point.
    a_len = (ra * ra - rb * rb + d2) / (2.0 * d)
    ux = dx / d
    uy = dy / d
    mx = xa + a_len * ux
    my = ya + a_len * uy

    tangent = abs(d - rsum) <= eps or abs(d - rdiff) <= eps
    if tangent:
        return ((mx, my),)

    h2 = ra * ra - a_len * a_len
    h = math.sqrt(h2) if h2 > 0 else 0.0
    return ((mx + h * uy, my - h * ux), (mx - h * uy, my + h * ux))


def circle_intersection_points(
    a: Disk, b: Disk, tol: Tolerance = DEFAULT_TOLERANCE
) -> tuple[Point, ...]:
    """Points where the two disk boundaries cross.

    Two points in general position, one at tangency, zero when the circles
    are disjoint or strictly nested.  Raises CoincidentCirclesError when the
    circles coincide within tolerance.
    """
    pts = _circle_points_raw(
        a.center.x, a.center.y, a.radius,
        b.center.x, b.center.y, b.radius,
        tol.eps,
    )
    if pts is None:
        raise CoincidentCirclesError(
            f"disks {a.id} and {b.id} have coincident boundary circles"
        )
    return tuple(Point(x, y) for x, y in pts)
