from fractions import Fraction as F

import pytest

from conftest import rand_points
from diskident.geometry import Point, Disk, HalfPlane
from diskident.oracle import (
    OracleError,
    realizable_subsets,
    realizable_subsets_fixed_r,
    naive_realizable_masks,
    realize_subset,
)


def P(x, y):
    return Point(F(x), F(y))


def masks_of(hg):
    return set(hg.masks())


def check_witnesses(pts, hg):
    for mask, d in hg.edges:
        got = 0
        for i, p in enumerate(pts):
            if d.contains(p):
                got |= 1 << i
        assert got == mask


def test_three_collinear_points():
    pts = [P(0, 0), P(1, 0), P(2, 0)]
    hg = realizable_subsets(pts)
    # prefixes and suffixes of the line order, but not {ends without middle}
    assert masks_of(hg) == {0b001, 0b010, 0b100, 0b011, 0b110, 0b111}
    check_witnesses(pts, hg)


def test_three_points_in_general_position():
    pts = [P(0, 0), P(4, 0), P(0, 4)]
    hg = realizable_subsets(pts)
    assert masks_of(hg) == set(range(1, 8))
    check_witnesses(pts, hg)


def test_skip_middle_subset_not_realizable():
    pts = [P(0, 0), P(1, 0), P(2, 0)]
    assert realize_subset(pts, 0b101) is None
    d = realize_subset(pts, 0b011)
    assert d is not None and d.contains(pts[0]) and d.contains(pts[1])
    assert not d.contains(pts[2])


def test_naive_enumerator_agrees_random():
    for seed in range(12):
        n = 3 + seed % 6
        pts = rand_points(n, 1000 + seed)
        assert masks_of(realizable_subsets(pts)) == naive_realizable_masks(pts)


def test_fixed_radius_far_points_are_singletons():
    pts = [P(0, 0), P(10, 0)]
    hg = realizable_subsets_fixed_r(pts, F(1, 4))
    assert masks_of(hg) == {0b01, 0b10}
    check_witnesses(pts, hg)


def test_fixed_radius_collinear_runs():
    pts = [P(0, 0), P(1, 0), P(2, 0), P(9, 0)]
    hg = realizable_subsets_fixed_r(pts, F(4))
    ms = masks_of(hg)
    assert 0b0111 in ms and 0b1000 in ms and 0b1111 not in ms
    check_witnesses(pts, hg)


def test_fixed_radius_boundary_pair_at_diameter():
    # distance exactly 2r: only the midpoint center works
    pts = [P(0, 0), P(1, 0)]
    hg = realizable_subsets_fixed_r(pts, F(1, 4))
    assert 0b11 in masks_of(hg)
    check_witnesses(pts, hg)


def test_fixed_radius_general_matches_solver_needs():
    pts = [P(0, 0), P(2, 0), P(1, 2), P(5, 3)]
    hg = realizable_subsets_fixed_r(pts, F(9, 2))
    ms = masks_of(hg)
    assert all(1 << i in ms for i in range(4))  # singletons
    check_witnesses(pts, hg)
    for _, d in hg.edges:
        assert d.r2 == F(9, 2)


def test_realize_subset_fixed_radius():
    pts = [P(0, 0), P(1, 0), P(5, 0)]
    d = realize_subset(pts, 0b011, r2=F(1))
    assert d is not None and d.r2 == F(1)
    assert realize_subset(pts, 0b101, r2=F(1)) is None


def test_input_validation():
    with pytest.raises(OracleError):
        realizable_subsets([P(0, 0), P(0, 0)])
    with pytest.raises(OracleError):
        realizable_subsets([])
    with pytest.raises(OracleError):
        realizable_subsets_fixed_r([P(0, 0)], F(0))
    with pytest.raises(OracleError):
        realize_subset([P(0, 0)], 0b10)


def test_halfplanes_add_no_free_radius_subsets():
    # any half-plane trace on the points is already a disk trace
    for seed in (3, 4, 5):
        pts = rand_points(5, 2000 + seed)
        ms = naive_realizable_masks(pts)
        import itertools
        for a, b in itertools.permutations(range(5), 2):
            hp_mask = 0
            va = pts[b].x - pts[a].x
            vb = pts[b].y - pts[a].y
            c = va * pts[a].x + vb * pts[a].y
            for i, p in enumerate(pts):
                if va * p.x + vb * p.y <= c:
                    hp_mask |= 1 << i
            if hp_mask:
                assert hp_mask in ms
