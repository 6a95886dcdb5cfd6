"""Exact rational planar geometry: predicates, hulls, circumdisks, Delaunay.

All coordinates are `fractions.Fraction`; every predicate is decided
exactly.  There is deliberately no floating point on any decision path.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import NamedTuple, Sequence, Union

Rational = Fraction


class GeometryError(ValueError):
    """Invalid or degenerate geometric input."""


class CollinearPointsError(GeometryError):
    """Raised when an operation requires non-collinear points."""


class DegenerateConfigurationError(GeometryError):
    """Input violates a general-configuration precondition.

    Carries ``indices``: the offending triple or quadruple when known.
    """

    def __init__(self, message: str, indices: tuple = ()):
        super().__init__(message)
        self.indices = tuple(indices)


class Point(NamedTuple):
    x: Fraction
    y: Fraction


def rat(value) -> Fraction:
    """Coerce an int, Fraction or string like ``"3/7"`` / ``"0.25"``."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise GeometryError("boolean is not a coordinate")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value)
        except (ValueError, ZeroDivisionError) as exc:
            raise GeometryError(f"bad rational literal {value!r}: {exc}") from None
    raise GeometryError(f"cannot interpret {value!r} as an exact rational")


def pt(x, y) -> Point:
    return Point(rat(x), rat(y))


def sq_dist(p: Point, q: Point) -> Fraction:
    dx = p.x - q.x
    dy = p.y - q.y
    return dx * dx + dy * dy


def _sign(v) -> int:
    return (v > 0) - (v < 0)


def orientation(p: Point, q: Point, r: Point) -> int:
    """Sign of the cross product (q-p) x (r-p): +1 left turn, 0 collinear."""
    return _sign((q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x))


def in_circumcircle(a: Point, b: Point, c: Point, p: Point) -> int:
    """+1 if p is strictly inside the circle through a,b,c; 0 on it; -1 outside.

    a, b, c must not be collinear.  A clockwise triple is handled by
    normalizing with the orientation sign.
    """
    o = orientation(a, b, c)
    if o == 0:
        raise CollinearPointsError("circumcircle of collinear points is undefined")
    adx, ady = a.x - p.x, a.y - p.y
    bdx, bdy = b.x - p.x, b.y - p.y
    cdx, cdy = c.x - p.x, c.y - p.y
    det = (
        (adx * adx + ady * ady) * (bdx * cdy - cdx * bdy)
        + (bdx * bdx + bdy * bdy) * (cdx * ady - adx * cdy)
        + (cdx * cdx + cdy * cdy) * (adx * bdy - bdx * ady)
    )
    return _sign(det) * o


def circumcenter(a: Point, b: Point, c: Point) -> Point:
    """Exact circumcenter; raises CollinearPointsError for collinear input."""
    # Perpendicular bisector equations 2(b-a).c = |b|^2-|a|^2 etc., by Cramer.
    a1, b1 = 2 * (b.x - a.x), 2 * (b.y - a.y)
    c1 = (b.x * b.x + b.y * b.y) - (a.x * a.x + a.y * a.y)
    a2, b2 = 2 * (c.x - a.x), 2 * (c.y - a.y)
    c2 = (c.x * c.x + c.y * c.y) - (a.x * a.x + a.y * a.y)
    det = a1 * b2 - a2 * b1
    if det == 0:
        raise CollinearPointsError("circumcenter of collinear points is undefined")
    return Point((c1 * b2 - c2 * b1) / det, (a1 * c2 - a2 * c1) / det)


@dataclass(frozen=True)
class Disk:
    """Closed disk: all points at squared distance <= r2 from center."""

    center: Point
    r2: Fraction

    def contains(self, p: Point) -> bool:
        return sq_dist(self.center, p) <= self.r2

    def boundary_contains(self, p: Point) -> bool:
        return sq_dist(self.center, p) == self.r2


@dataclass(frozen=True)
class HalfPlane:
    """Closed half-plane a*x + b*y <= c, the unbounded-radius limit of a disk."""

    a: Fraction
    b: Fraction
    c: Fraction

    def __post_init__(self):
        if self.a == 0 and self.b == 0:
            raise GeometryError("half-plane needs a nonzero normal")

    def contains(self, p: Point) -> bool:
        return self.a * p.x + self.b * p.y <= self.c


GeneralizedDisk = Union[Disk, HalfPlane]


def circumdisk(a: Point, b: Point, c: Point) -> Disk:
    center = circumcenter(a, b, c)
    return Disk(center, sq_dist(center, a))


def convex_hull(points: Sequence[Point]) -> list[Point]:
    """Counterclockwise hull via monotone chain; duplicates removed.

    Collinear inputs degenerate to the two extreme points (or one).
    No three consecutive output vertices are collinear.
    """
    if not points:
        raise GeometryError("convex hull of an empty set")
    pts = sorted(set(points))
    if len(pts) == 1:
        return pts
    lower: list[Point] = []
    for p in pts:
        while len(lower) >= 2 and orientation(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: list[Point] = []
    for p in reversed(pts):
        while len(upper) >= 2 and orientation(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    hull = lower[:-1] + upper[:-1]
    if not hull:  # all collinear: lower/upper collapse to the extremes
        return [pts[0], pts[-1]]
    return hull


@dataclass
class Triangulation:
    vertices: list[Point]
    triangles: list[tuple[int, int, int]]  # each oriented counterclockwise


def all_collinear(points: Sequence[Point]) -> bool:
    if len(points) <= 2:
        return True
    a, b = points[0], points[1]
    return all(orientation(a, b, p) == 0 for p in points[2:])


def _int_orient(a, b, c) -> int:
    return _sign((b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]))


def _int_incircle(a, b, c, p) -> int:
    """in_circumcircle on integer pairs, assuming (a,b,c) counterclockwise."""
    adx, ady = a[0] - p[0], a[1] - p[1]
    bdx, bdy = b[0] - p[0], b[1] - p[1]
    cdx, cdy = c[0] - p[0], c[1] - p[1]
    det = (
        (adx * adx + ady * ady) * (bdx * cdy - cdx * bdy)
        + (bdx * bdx + bdy * bdy) * (cdx * ady - adx * cdy)
        + (cdx * cdx + cdy * cdy) * (adx * bdy - bdx * ady)
    )
    return _sign(det)


def find_collinear_triple(points: Sequence[Point]):
    """First collinear index triple in lexicographic order, or None."""
    P, _ = scale_to_ints(points)
    for i, j, k in itertools.combinations(range(len(P)), 3):
        if _int_orient(P[i], P[j], P[k]) == 0:
            return (i, j, k)
    return None


def find_cocyclic_quadruple(points: Sequence[Point]):
    """First quadruple lying on one circle, or None.  Assumes no 3 collinear."""
    P, _ = scale_to_ints(points)
    n = len(P)
    for i, j, k in itertools.combinations(range(n), 3):
        a, b, c = P[i], P[j], P[k]
        if _int_orient(a, b, c) < 0:
            b, c = c, b
        for m in range(k + 1, n):
            if m in (i, j, k):
                continue
            if _int_incircle(a, b, c, P[m]) == 0:
                return (i, j, k, m)
    return None


def is_general_configuration(points: Sequence[Point]) -> bool:
    return (
        len(set(points)) == len(points)
        and find_collinear_triple(points) is None
        and find_cocyclic_quadruple(points) is None
    )


def delaunay(points: Sequence[Point]) -> Triangulation:
    """Delaunay triangulation of points in general configuration.

    Requires at least 3 points, no duplicates, no three collinear and no
    four cocyclic; under those preconditions the triangulation is unique
    and equals the set of triangles with an empty open circumdisk, which
    is what this builds (checked exhaustively with exact predicates).
    """
    pts = list(points)
    n = len(pts)
    if n < 3:
        raise GeometryError("triangulation needs at least 3 points")
    if len(set(pts)) != n:
        raise GeometryError("duplicate points in triangulation input")
    tri = find_collinear_triple(pts)
    if tri is not None:
        raise DegenerateConfigurationError(
            f"three collinear points at indices {tri}", tri
        )
    P, _ = scale_to_ints(pts)
    triangles: list[tuple[int, int, int]] = []
    for i, j, k in itertools.combinations(range(n), 3):
        a, b, c = P[i], P[j], P[k]
        if _int_orient(a, b, c) < 0:
            j, k = k, j
            b, c = c, b
        empty = True
        for m in range(n):
            if m in (i, j, k):
                continue
            s = _int_incircle(a, b, c, P[m])
            if s == 0:
                quad = tuple(sorted((i, j, k, m)))
                raise DegenerateConfigurationError(
                    f"four cocyclic points at indices {quad}", quad
                )
            if s > 0:
                empty = False
                break
        if empty:
            triangles.append((i, j, k))
    # Euler consistency: t = 2n - 2 - h for a triangulated hull.
    h = len(convex_hull(pts))
    if len(triangles) != 2 * n - 2 - h:
        raise GeometryError(
            f"triangulation inconsistency: {len(triangles)} triangles for n={n}, hull={h}"
        )
    return Triangulation(vertices=pts, triangles=triangles)


def scale_to_ints(points: Sequence[Point]) -> tuple[list[tuple[int, int]], int]:
    """Scale points by the lcm of coordinate denominators to integer pairs."""
    scale = 1
    for p in points:
        scale = lcm(scale, p.x.denominator, p.y.denominator)
    scaled = [(int(p.x * scale), int(p.y * scale)) for p in points]
    return scaled, scale
