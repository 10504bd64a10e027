"""Tests for the brute-force common-point oracle and the cross-checker."""

import random

import pytest

from cechcover import (
    Disk,
    DiskSet,
    SimplicialComplex,
    build_cech,
    common_point_exists,
    cross_check,
    verify_candidate,
)
from conftest import CASE1, CASE2, CASE_NONE, FIVE_SOLID, HOLE_TRIAD, pairwise_intersecting_instance


# ── common_point_exists ──────────────────────────────────────────


class TestCommonPointExists:
    def test_case1_quadruple_yes(self):
        verdict = common_point_exists(list(CASE1))
        assert verdict.decision == "yes"
        assert verdict.margin > 0

    def test_case2_quadruple_yes(self):
        verdict = common_point_exists(list(CASE2))
        assert verdict.decision == "yes"

    def test_disjoint_quadruple_no(self):
        verdict = common_point_exists(list(CASE_NONE))
        assert verdict.decision == "no"
        assert verdict.margin < 0

    def test_triad_has_no_common_point(self):
        assert common_point_exists(list(HOLE_TRIAD)).decision == "no"

    def test_tangent_disks_near_zero_margin(self):
        disks = [Disk.of(0, 0.0, 0.0, 1.0), Disk.of(1, 2.0, 0.0, 1.0)]
        verdict = common_point_exists(disks, resolution=1e-3)
        # The common point is a single tangency point; the verdict may land
        # either way but the margin must be within grid reach of zero.
        assert abs(verdict.margin) < 1e-3

    def test_two_overlapping_disks_yes(self):
        disks = [Disk.of(0, 0.0, 0.0, 1.0), Disk.of(1, 1.0, 0.0, 1.0)]
        assert common_point_exists(disks).decision == "yes"

    def test_needs_two_disks(self):
        with pytest.raises(ValueError, match="2 disks"):
            common_point_exists([Disk.of(0, 0.0, 0.0, 1.0)])

    def test_resolution_must_be_positive(self):
        disks = [Disk.of(0, 0.0, 0.0, 1.0), Disk.of(1, 1.0, 0.0, 1.0)]
        with pytest.raises(ValueError, match="resolution"):
            common_point_exists(disks, resolution=0.0)

    def test_inconclusive_only_within_guard(self):
        rng = random.Random(41)
        resolution = 5e-3
        guard = 2 * resolution / 100
        for _ in range(100):
            ds = pairwise_intersecting_instance(rng, rng.randint(2, 4))
            verdict = common_point_exists(list(ds), resolution=resolution)
            if verdict.decision == "inconclusive":
                assert abs(verdict.margin) <= guard

    def test_agrees_with_verify_candidate(self):
        rng = random.Random(42)
        checked = 0
        for _ in range(150):
            ds = pairwise_intersecting_instance(rng, rng.randint(3, 6))
            verdict = common_point_exists(list(ds), resolution=5e-3)
            if verdict.decision == "inconclusive":
                continue
            expected = verify_candidate(ds, tuple(range(len(ds))))
            assert verdict.decision == ("yes" if expected else "no")
            checked += 1
        assert checked > 100


# ── cross_check ──────────────────────────────────────────────────


class TestCrossCheck:
    def test_fixture_complexes_agree(self):
        for ds in (HOLE_TRIAD, CASE1, FIVE_SOLID):
            cx = build_cech(ds, dmax=3)
            assert cross_check(ds, cx, resolution=2e-3) == []

    def test_empty_diskset(self):
        ds = DiskSet(())
        assert cross_check(ds, build_cech(ds), resolution=2e-3) == []

    def test_corrupted_complex_caught(self):
        cx = build_cech(FIVE_SOLID, dmax=3)
        # Drop the tetrahedron: the oracle still finds its common point.
        levels = cx.levels[:3] + ((),)
        corrupted = SimplicialComplex(
            levels=levels,
            neighbors=cx.neighbors,
            dmax=cx.dmax,
            kind=cx.kind,
            complete=cx.complete,
        )
        disagreements = cross_check(FIVE_SOLID, corrupted, resolution=2e-3)
        assert len(disagreements) == 1
        assert disagreements[0].candidate == (0, 1, 2, 4)
        assert disagreements[0].in_complex is False
        assert disagreements[0].verdict.decision == "yes"

    def test_foreign_simplex_caught(self):
        cx = build_cech(HOLE_TRIAD, dmax=2)
        # Claim the empty triangle is filled; the oracle disagrees.
        levels = (cx.levels[0], cx.levels[1], ((0, 1, 2),))
        corrupted = SimplicialComplex(
            levels=levels,
            neighbors=cx.neighbors,
            dmax=cx.dmax,
            kind=cx.kind,
            complete=False,
        )
        disagreements = cross_check(HOLE_TRIAD, corrupted, resolution=2e-3)
        assert len(disagreements) == 1
        assert disagreements[0].candidate == (0, 1, 2)
        assert disagreements[0].in_complex is True
        assert disagreements[0].verdict.decision == "no"

    def test_random_scenario_complex_agrees(self):
        rng = random.Random(43)
        disks = tuple(
            Disk.of(i, rng.uniform(0, 4), rng.uniform(0, 4), rng.uniform(0.5, 1.0))
            for i in range(12)
        )
        ds = DiskSet(disks)
        cx = build_cech(ds, dmax=3)
        assert cross_check(ds, cx, resolution=4e-3) == []
