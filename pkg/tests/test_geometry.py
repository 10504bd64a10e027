"""Tests for the planar disk primitives and their tolerance policy."""

import math
import random

import pytest

from cechcover import (
    DEFAULT_TOLERANCE,
    CoincidentCirclesError,
    Disk,
    Point,
    Tolerance,
    circle_intersection_points,
    disk_inside_disk,
    disks_intersect,
    point_in_disk,
)


# ── Construction and validation ──────────────────────────────────


class TestTypes:
    def test_point_fields(self):
        p = Point(1.5, -2.0)
        assert p.x == 1.5
        assert p.y == -2.0

    def test_point_rejects_nan(self):
        with pytest.raises(ValueError, match="finite"):
            Point(float("nan"), 0.0)

    def test_point_rejects_infinity(self):
        with pytest.raises(ValueError, match="finite"):
            Point(0.0, float("inf"))

    def test_disk_of(self):
        d = Disk.of(3, 1.0, 2.0, 0.5)
        assert d.id == 3
        assert d.center == Point(1.0, 2.0)
        assert d.radius == 0.5

    def test_disk_radius_must_be_positive(self):
        with pytest.raises(ValueError, match="radius"):
            Disk.of(0, 0.0, 0.0, 0.0)
        with pytest.raises(ValueError, match="radius"):
            Disk.of(0, 0.0, 0.0, -1.0)

    def test_disk_id_must_be_nonnegative(self):
        with pytest.raises(ValueError, match="id"):
            Disk.of(-1, 0.0, 0.0, 1.0)

    def test_disk_frozen(self):
        d = Disk.of(0, 0.0, 0.0, 1.0)
        with pytest.raises(AttributeError):
            d.radius = 2.0

    def test_tolerance_default(self):
        assert DEFAULT_TOLERANCE.eps == 1e-9

    def test_tolerance_rejects_negative(self):
        with pytest.raises(ValueError, match="eps"):
            Tolerance(eps=-1e-9)


# ── disks_intersect ──────────────────────────────────────────────


class TestDisksIntersect:
    def test_overlapping_pair(self):
        a = Disk.of(0, 0.0, 0.0, 0.485)
        b = Disk.of(1, 0.9, 0.0, 0.485)
        assert disks_intersect(a, b)

    def test_identical_disks(self):
        a = Disk.of(0, 0.0, 0.0, 1.0)
        b = Disk.of(1, 0.0, 0.0, 1.0)
        assert disks_intersect(a, b)

    def test_far_apart(self):
        a = Disk.of(0, 0.0, 0.0, 1.0)
        b = Disk.of(1, 3.0, 0.0, 1.0)
        assert not disks_intersect(a, b)

    def test_tangency_counts(self):
        a = Disk.of(0, 0.0, 0.0, 1.0)
        b = Disk.of(1, 2.0, 0.0, 1.0)
        assert disks_intersect(a, b)

    def test_just_beyond_eps_fails(self):
        a = Disk.of(0, 0.0, 0.0, 1.0)
        b = Disk.of(1, 2.0 + 1e-6, 0.0, 1.0)
        assert not disks_intersect(a, b)

    def test_within_eps_passes(self):
        a = Disk.of(0, 0.0, 0.0, 1.0)
        b = Disk.of(1, 2.0 + 1e-12, 0.0, 1.0)
        assert disks_intersect(a, b)

    def test_symmetry(self):
        rng = random.Random(11)
        for _ in range(200):
            a = Disk.of(0, rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(0.1, 2))
            b = Disk.of(1, rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(0.1, 2))
            assert disks_intersect(a, b) == disks_intersect(b, a)


# ── disk_inside_disk ─────────────────────────────────────────────


class TestDiskInsideDisk:
    def test_smallest_cell_inside(self):
        inner = Disk.of(0, 1.0, 2.3, 0.3)
        outer = Disk.of(1, 0.5, 1.8, 1.1)
        assert disk_inside_disk(inner, outer)

    def test_self_containment(self):
        d = Disk.of(0, 1.0, 1.0, 0.7)
        assert disk_inside_disk(d, d)

    def test_larger_not_inside_smaller(self):
        inner = Disk.of(0, 0.0, 0.0, 1.0)
        outer = Disk.of(1, 0.0, 0.0, 0.5)
        assert not disk_inside_disk(inner, outer)

    def test_overlap_without_containment(self):
        a = Disk.of(0, 0.0, 0.0, 1.0)
        b = Disk.of(1, 1.0, 0.0, 1.0)
        assert not disk_inside_disk(a, b)

    def test_internal_tangency(self):
        inner = Disk.of(0, 0.5, 0.0, 0.5)
        outer = Disk.of(1, 0.0, 0.0, 1.0)
        assert disk_inside_disk(inner, outer)

    def test_containment_implies_intersection(self):
        rng = random.Random(12)
        hits = 0
        for _ in range(500):
            a = Disk.of(0, rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(0.1, 2))
            b = Disk.of(1, rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(0.1, 2))
            if disk_inside_disk(a, b):
                hits += 1
                assert disks_intersect(a, b)
        assert hits > 0


# ── point_in_disk ────────────────────────────────────────────────


class TestPointInDisk:
    def test_marked_point(self):
        assert point_in_disk(Point(1.16, 1.82), Disk.of(2, 1.2, 1.5, 0.5))

    def test_center(self):
        d = Disk.of(0, 3.0, -1.0, 0.25)
        assert point_in_disk(d.center, d)

    def test_outside(self):
        assert not point_in_disk(Point(2.0, 0.0), Disk.of(0, 0.0, 0.0, 1.0))

    def test_boundary_point(self):
        assert point_in_disk(Point(1.0, 0.0), Disk.of(0, 0.0, 0.0, 1.0))


# ── circle_intersection_points ───────────────────────────────────


class TestCircleIntersectionPoints:
    def test_two_unit_circles(self):
        a = Disk.of(0, 0.0, 0.0, 1.0)
        b = Disk.of(1, 1.0, 0.0, 1.0)
        pts = circle_intersection_points(a, b)
        assert len(pts) == 2
        ys = sorted(p.y for p in pts)
        assert pts[0].x == pytest.approx(0.5, abs=1e-12)
        assert pts[1].x == pytest.approx(0.5, abs=1e-12)
        assert ys[0] == pytest.approx(-math.sqrt(3) / 2, abs=1e-12)
        assert ys[1] == pytest.approx(math.sqrt(3) / 2, abs=1e-12)

    def test_residual_on_both_circles(self):
        a = Disk.of(0, 0.0, 0.0, 1.0)
        b = Disk.of(1, 1.0, 0.0, 1.0)
        for p in circle_intersection_points(a, b):
            ra = math.hypot(p.x - a.center.x, p.y - a.center.y)
            rb = math.hypot(p.x - b.center.x, p.y - b.center.y)
            assert abs(ra - a.radius) < 1e-12
            assert abs(rb - b.radius) < 1e-12

    def test_external_tangency_single_point(self):
        a = Disk.of(0, 0.0, 0.0, 1.0)
        b = Disk.of(1, 2.0, 0.0, 1.0)
        pts = circle_intersection_points(a, b)
        assert len(pts) == 1
        assert pts[0].x == pytest.approx(1.0, abs=1e-12)
        assert pts[0].y == pytest.approx(0.0, abs=1e-12)

    def test_internal_tangency_single_point(self):
        a = Disk.of(0, 0.0, 0.0, 1.0)
        b = Disk.of(1, 0.5, 0.0, 0.5)
        pts = circle_intersection_points(a, b)
        assert len(pts) == 1
        assert pts[0].x == pytest.approx(1.0, abs=1e-12)

    def test_strict_containment_no_points(self):
        a = Disk.of(0, 0.0, 0.0, 2.0)
        b = Disk.of(1, 0.5, 0.0, 1.0)
        assert circle_intersection_points(a, b) == ()

    def test_disjoint_no_points(self):
        a = Disk.of(0, 0.0, 0.0, 1.0)
        b = Disk.of(1, 5.0, 0.0, 1.0)
        assert circle_intersection_points(a, b) == ()

    def test_coincident_circles_is_an_error(self):
        a = Disk.of(0, 1.0, 1.0, 0.5)
        b = Disk.of(1, 1.0, 1.0, 0.5)
        with pytest.raises(CoincidentCirclesError):
            circle_intersection_points(a, b)

    def test_symmetry_of_point_sets(self):
        rng = random.Random(13)
        for _ in range(200):
            a = Disk.of(0, rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(0.3, 2))
            b = Disk.of(1, rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(0.3, 2))
            try:
                ab = circle_intersection_points(a, b)
                ba = circle_intersection_points(b, a)
            except CoincidentCirclesError:
                continue
            assert len(ab) == len(ba)
            for p, q in zip(sorted((p.x, p.y) for p in ab),
                            sorted((p.x, p.y) for p in ba)):
                assert p[0] == pytest.approx(q[0], abs=1e-9)
                assert p[1] == pytest.approx(q[1], abs=1e-9)

    def test_points_lie_in_tol_inflated_disks(self):
        rng = random.Random(14)
        for _ in range(300):
            a = Disk.of(0, rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(0.3, 2))
            b = Disk.of(1, rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(0.3, 2))
            try:
                pts = circle_intersection_points(a, b)
            except CoincidentCirclesError:
                continue
            tol = Tolerance(eps=1e-7)
            for p in pts:
                assert point_in_disk(p, a, tol)
                assert point_in_disk(p, b, tol)

    def test_rigid_motion_invariance(self):
        rng = random.Random(15)
        for _ in range(100):
            ax, ay, ar = rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(0.5, 1.5)
            bx, by, br = rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(0.5, 1.5)
            theta = rng.uniform(0, 2 * math.pi)
            tx, ty = rng.uniform(-3, 3), rng.uniform(-3, 3)
            cos_t, sin_t = math.cos(theta), math.sin(theta)

            def move(x, y):
                return (cos_t * x - sin_t * y + tx, sin_t * x + cos_t * y + ty)

            a = Disk.of(0, ax, ay, ar)
            b = Disk.of(1, bx, by, br)
            a2 = Disk.of(0, *move(ax, ay), ar)
            b2 = Disk.of(1, *move(bx, by), br)
            try:
                pts = circle_intersection_points(a, b)
                pts2 = circle_intersection_points(a2, b2)
            except CoincidentCirclesError:
                continue
            moved = sorted(move(p.x, p.y) for p in pts)
            direct = sorted((p.x, p.y) for p in pts2)
            assert len(moved) == len(direct)
            for m, d in zip(moved, direct):
                assert m[0] == pytest.approx(d[0], abs=1e-9)
                assert m[1] == pytest.approx(d[1], abs=1e-9)
