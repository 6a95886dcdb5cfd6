from fractions import Fraction as F

import pytest

from diskident.geometry import (
    Point,
    Disk,
    HalfPlane,
    GeometryError,
    DegenerateConfigurationError,
    orientation,
    in_circumcircle,
    circumcenter,
    circumdisk,
    convex_hull,
    delaunay,
    all_collinear,
    find_collinear_triple,
    find_cocyclic_quadruple,
    is_general_configuration,
    scale_to_ints,
    sq_dist,
)


def P(x, y):
    return Point(F(x), F(y))


def test_orientation_signs():
    assert orientation(P(0, 0), P(1, 0), P(0, 1)) == 1
    assert orientation(P(0, 0), P(1, 0), P(0, -1)) == -1
    assert orientation(P(0, 0), P(1, 1), P(2, 2)) == 0


def test_orientation_exact_near_degenerate():
    # tiny rational perturbations never round to zero
    eps = F(1, 10**30)
    assert orientation(P(0, 0), P(1, 1), Point(F(2), F(2) + eps)) == 1
    assert orientation(P(0, 0), P(1, 1), Point(F(2), F(2) - eps)) == -1


def test_circumcenter_and_circumdisk():
    c = circumcenter(P(0, 0), P(4, 0), P(2, 2))
    assert c == P(2, 0)
    d = circumdisk(P(0, 0), P(4, 0), P(2, 2))
    assert d.center == P(2, 0) and d.r2 == 4
    for q in (P(0, 0), P(4, 0), P(2, 2)):
        assert d.boundary_contains(q)


def test_circumcenter_collinear_raises():
    with pytest.raises(GeometryError):
        circumcenter(P(0, 0), P(1, 1), P(2, 2))


def test_in_circumcircle_orientation_independent():
    args = (P(0, 0), P(4, 0), P(2, 2))
    inside, outside = P(2, 1), P(5, 5)
    assert in_circumcircle(*args, inside) == 1
    assert in_circumcircle(args[0], args[2], args[1], inside) == 1
    assert in_circumcircle(*args, outside) == -1
    assert in_circumcircle(*args, P(0, 0)) == 0


def test_disk_and_halfplane_containment():
    d = Disk(P(0, 0), F(2))
    assert d.contains(P(1, 1)) and d.boundary_contains(P(1, 1))
    assert d.contains(P(1, 0)) and not d.boundary_contains(P(1, 0))
    assert not d.contains(P(2, 1))
    h = HalfPlane(F(0), F(1), F(3, 2))  # y <= 3/2
    assert h.contains(P(10, 1)) and not h.contains(P(0, 2))
    assert h.contains(P(0, F(3, 2)))  # closed boundary
    with pytest.raises(GeometryError):
        HalfPlane(F(0), F(0), F(1))


def test_convex_hull():
    pts = [P(0, 0), P(2, 0), P(2, 2), P(0, 2), P(1, 1), P(1, 0)]
    hull = convex_hull(pts)
    assert hull == [P(0, 0), P(2, 0), P(2, 2), P(0, 2)]
    # collinear input collapses to the two extremes
    assert convex_hull([P(0, 0), P(1, 1), P(3, 3)]) == [P(0, 0), P(3, 3)]


def test_delaunay_square_plus_center():
    pts = [P(0, 0), P(4, 0), P(1, 1), P(2, 5)]
    tri = delaunay(pts)
    # one point is strictly inside the hull of the other three
    assert len(tri.triangles) == 3
    for t in tri.triangles:
        a, b, c = (pts[i] for i in t)
        for m in range(4):
            if m not in t:
                assert in_circumcircle(a, b, c, pts[m]) == -1


def test_delaunay_degeneracies_named():
    with pytest.raises(DegenerateConfigurationError) as ei:
        delaunay([P(0, 0), P(1, 1), P(2, 2), P(0, 5)])
    assert ei.value.indices == (0, 1, 2)
    square = [P(0, 0), P(2, 0), P(2, 2), P(0, 2), P(1, 5)]
    with pytest.raises(DegenerateConfigurationError) as ei:
        delaunay(square)
    assert ei.value.indices == (0, 1, 2, 3)


def test_degeneracy_predicates():
    assert all_collinear([P(0, 0), P(1, 2), P(2, 4)])
    assert not all_collinear([P(0, 0), P(1, 2), P(2, 5)])
    assert find_collinear_triple([P(0, 0), P(1, 0), P(5, 5), P(3, 0)]) == (0, 1, 3)
    assert find_cocyclic_quadruple([P(0, 0), P(2, 0), P(2, 2), P(0, 2), P(1, 5)]) == (0, 1, 2, 3)
    assert is_general_configuration([P(0, 0), P(1, 0), P(0, 1), P(3, 5)])


def test_scale_to_ints():
    pts = [Point(F(1, 2), F(1, 3)), Point(F(5, 6), F(-2))]
    ints, scale = scale_to_ints(pts)
    assert scale == 6
    assert ints == [(3, 2), (5, -12)]
    for p, q in zip(pts, ints):
        assert p.x * scale == q[0] and p.y * scale == q[1]


def test_sq_dist():
    assert sq_dist(P(0, 0), P(3, 4)) == 25
    assert sq_dist(Point(F(1, 2), F(0)), Point(F(0), F(1, 2))) == F(1, 2)
