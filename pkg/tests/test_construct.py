from fractions import Fraction as F

import pytest

from conftest import rand_points, rand_collinear
from diskident.geometry import (
    Point,
    Disk,
    HalfPlane,
    CollinearPointsError,
    DegenerateConfigurationError,
    delaunay,
)
from diskident import construct as C
from diskident.construct import ConstructError
from diskident.instances import gen_random_general
from diskident.solver import verify


def P(x, y):
    return Point(F(x), F(y))


def test_collinear_sizes_and_validity():
    for n in range(1, 12):
        pts = [P(3 * i, -i) for i in range(n)]
        fam = C.identify_collinear(pts)
        assert len(fam) == (n + 2) // 2
        assert verify(pts, fam).is_valid


def test_collinear_input_order_irrelevant():
    pts = rand_collinear(8, 17)
    fam = C.identify_collinear(list(reversed(pts)))
    assert verify(list(reversed(pts)), fam).is_valid


def test_collinear_rejects_noncollinear():
    with pytest.raises(CollinearPointsError):
        C.identify_collinear([P(0, 0), P(1, 0), P(1, 1)])


def test_greedy_sizes_and_validity():
    for seed in range(15):
        n = 1 + seed
        pts = rand_points(n, 500 + seed)
        fam = C.identify_greedy_half(pts)
        assert len(fam) == n // 2 + 1
        assert verify(pts, fam).is_valid


def test_greedy_handles_collinear_input():
    pts = [P(i, 3) for i in range(9)]
    fam = C.identify_greedy_half(pts)
    assert len(fam) == 5 and verify(pts, fam).is_valid


def test_six_partition_counts_and_halfplanes():
    for n, seed in [(1, 1), (4, 2), (6, 3), (11, 4), (14, 5)]:
        pts = gen_random_general(n, seed).points
        sp = C.six_partition(pts)
        q = -(-n // 6)
        assert all(q - 1 <= c <= q for c in sp.counts().values())
        assert len(sp.halfplanes) == 3
        # no point on any partition line
        for p in pts:
            for a, b, c in sp.lines:
                assert a * p.x + b * p.y != c
        # lines are concurrent at the apex
        for a, b, c in sp.lines:
            assert a * sp.apex.x + b * sp.apex.y == c


def test_six_partition_rejects_collinear_triple():
    with pytest.raises(DegenerateConfigurationError):
        C.six_partition([P(0, 0), P(1, 0), P(2, 0), P(1, 5)])


def test_trichromatic_triangle():
    pts = [P(0, 0), P(4, 0), P(2, 3), P(2, 1)]
    tri = delaunay(pts)
    t = C.trichromatic_triangle(tri, ["a", "b", "c", "a"])
    assert len({["a", "b", "c", "a"][i] for i in t}) == 3
    with pytest.raises(ConstructError):
        C.trichromatic_triangle(tri, ["a", "a", "a", "a"])


def test_general_position_sizes_and_validity():
    for n, seed in [(2, 9), (6, 10), (7, 11), (13, 12), (19, 13)]:
        pts = gen_random_general(n, seed).points
        fam = C.identify_general_position(pts)
        assert len(fam) == 2 * (-(-n // 6)) + 1
        assert verify(pts, fam).is_valid


def test_general_position_rejects_degenerate():
    with pytest.raises(DegenerateConfigurationError) as ei:
        C.identify_general_position([P(0, 0), P(1, 1), P(2, 2), P(5, 0)])
    assert ei.value.indices == (0, 1, 2)
    with pytest.raises(DegenerateConfigurationError) as ei:
        C.identify_general_position([P(0, 0), P(2, 0), P(2, 2), P(0, 2), P(1, 5)])
    assert ei.value.indices == (0, 1, 2, 3)


def test_grid_2xn_table():
    for n in range(2, 14):
        pts = C.grid_points(2, n)
        fam = C.identify_grid_2xn(n)
        expect = (n + 2) // 2 + (1 if n in (2, 3, 4, 5, 7) else 0)
        assert len(fam) == expect, n
        assert verify(pts, fam).is_valid, n


def test_grid_halfplanes():
    for m, n in [(3, 3), (3, 4), (4, 3), (4, 4), (5, 6)]:
        pts = C.grid_points(m, n)
        fam = C.identify_grid_halfplanes(m, n)
        assert len(fam) == m + n - 2
        assert all(isinstance(h, HalfPlane) for h in fam)
        assert verify(pts, fam).is_valid
    with pytest.raises(ConstructError):
        C.identify_grid_halfplanes(2, 5)


def test_grid_long():
    for m, n in [(3, 2), (3, 4), (3, 9), (4, 10), (5, 11), (3, 25)]:
        pts = C.grid_points(m, n)
        fam = C.identify_grid_long(m, n)
        assert len(fam) == -(-n // 2) + m - 1
        assert verify(pts, fam).is_valid
    with pytest.raises(ConstructError):
        C.identify_grid_long(2, 100)
    with pytest.raises(ConstructError):
        C.identify_grid_long(5, 5)


def test_grid_points_layout():
    pts = C.grid_points(2, 3)
    assert pts == [P(1, 1), P(2, 1), P(3, 1), P(1, 2), P(2, 2), P(3, 2)]


def test_duplicate_points_rejected():
    with pytest.raises(ConstructError):
        C.identify_greedy_half([P(0, 0), P(0, 0)])
