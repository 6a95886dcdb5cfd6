"""Bound formulas and generators for extremal and special instances.

The bounds:

* bound_log(n):    information-theoretic floor, smallest k with 2^k-1 >= n
* bound_sqrt(n):   arrangement floor, smallest k with k^2-k+1 >= n
* bound_upper(n):  universal ceiling ceil((n+1)/2)
* bound_genpos(n): general-configuration ceiling 2*ceil(n/6)+1
* bound_collinear, bound_grid2, bound_grid_hp: exact optima for those
  structured families

The generators produce named Instances with reproducible points and the
bounds known for their family; gen_polygon_arrangement realizes the
tightness of bound_sqrt with k congruent disks whose arrangement has
exactly k^2-k+1 nonempty inner faces.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from math import isqrt
import itertools
import random

from .geometry import (
    Point,
    Disk,
    GeneralizedDisk,
    sq_dist,
)
from . import oracle
from .construct import grid_points


class InstanceError(Exception):
    pass


@dataclass
class Instance:
    family: str
    params: dict
    points: list
    known: dict = field(default_factory=dict)  # lower / upper / exact

    @property
    def n(self) -> int:
        return len(self.points)


# ---------------------------------------------------------------------------
# closed-form bounds


def _check_n(n, low=1):
    if not isinstance(n, int) or n < low:
        raise InstanceError(f"parameter must be an integer >= {low}, got {n!r}")


def bound_log(n: int) -> int:
    """Smallest k with 2^k - 1 >= n: k disks produce at most 2^k - 1
    distinct nonempty signatures."""
    _check_n(n)
    return n.bit_length()


def bound_sqrt(n: int) -> int:
    """Smallest k with k^2 - k + 1 >= n: k circles bound at most
    k^2 - k + 1 inner faces.  Equals ceil((1 + sqrt(4n-3)) / 2),
    computed with exact integer square roots."""
    _check_n(n)
    k = (1 + isqrt(4 * n - 3)) // 2
    while k * k - k + 1 < n:
        k += 1
    while k > 1 and (k - 1) * (k - 2) + 1 >= n:
        k -= 1
    return k


def bound_upper(n: int) -> int:
    """ceil((n+1)/2): enough disks for any n points."""
    _check_n(n)
    return (n + 2) // 2


def bound_genpos(n: int) -> int:
    """2*ceil(n/6)+1: enough for points in general configuration."""
    _check_n(n)
    return 2 * (-(-n // 6)) + 1


def bound_collinear(n: int) -> int:
    """Exact optimum for n collinear points: ceil((n+1)/2)."""
    _check_n(n)
    return (n + 2) // 2


def bound_grid2(n: int) -> int:
    """Exact optimum for the 2 x n grid."""
    _check_n(n, 2)
    return (n + 2) // 2 + (1 if n in (2, 3, 4, 5, 7) else 0)


def bound_grid_hp(m: int, n: int) -> int:
    """Exact optimum for identifying the m x n grid with half-planes."""
    _check_n(m, 3)
    _check_n(n, 3)
    return m + n - 2


# ---------------------------------------------------------------------------
# generators


def gen_grid(m: int, n: int) -> Instance:
    _check_n(m)
    _check_n(n)
    known = {}
    if m == 1:
        known["exact"] = bound_collinear(n)
    elif m == 2 and n >= 2:
        known["exact"] = bound_grid2(n)
    return Instance("Grid", {"m": m, "n": n}, grid_points(m, n), known)


def _int_orient(a, b, c) -> int:
    return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])


def _int_incircle(a, b, c, p) -> int:
    if _int_orient(a, b, c) < 0:
        b, c = c, b
    ax, ay = a[0] - p[0], a[1] - p[1]
    bx, by = b[0] - p[0], b[1] - p[1]
    cx, cy = c[0] - p[0], c[1] - p[1]
    return (
        (ax * ax + ay * ay) * (bx * cy - cx * by)
        + (bx * bx + by * by) * (cx * ay - ax * cy)
        + (cx * cx + cy * cy) * (ax * by - bx * ay)
    )


def gen_random_general(n: int, seed: int) -> Instance:
    """n seeded random points in general configuration: coordinates on
    the lattice (1/40)Z^2, rejection-sampled so that no three points are
    collinear and no four cocyclic (exact integer predicates)."""
    _check_n(n)
    rng = random.Random(seed)
    ints: list[tuple] = []
    while len(ints) < n:
        cand = (rng.randrange(-800, 801), rng.randrange(-800, 801))
        if cand in ints:
            continue
        if any(
            _int_orient(ints[i], ints[j], cand) == 0
            for i, j in itertools.combinations(range(len(ints)), 2)
        ):
            continue
        if any(
            _int_incircle(ints[i], ints[j], ints[k], cand) == 0
            for i, j, k in itertools.combinations(range(len(ints)), 3)
        ):
            continue
        ints.append(cand)
    pts = [Point(Fraction(x, 40), Fraction(y, 40)) for x, y in ints]
    return Instance("RandomGeneral", {"n": n, "seed": seed}, pts)


def _approx_unit(num: int, den: int, scale: int = 1 << 16):
    """Rational approximation of (cos t, sin t) for t = 2*pi*num/den."""
    from math import cos, sin, pi

    t = 2 * pi * num / den
    return (
        Fraction(round(cos(t) * scale), scale),
        Fraction(round(sin(t) * scale), scale),
    )


def _strict_faces(disks: list[Disk], samples) -> dict:
    """Map from strict-containment signature (bitmask over disks) to a
    representative point strictly inside that face; boundary samples are
    skipped so each representative is interior."""
    faces: dict[int, Point] = {}
    for s in samples:
        mask = 0
        boundary = False
        for i, d in enumerate(disks):
            q = sq_dist(s, d.center)
            if q == d.r2:
                boundary = True
                break
            if q < d.r2:
                mask |= 1 << i
        if not boundary and mask and mask not in faces:
            faces[mask] = s
    return faces


def _polygon_disks(k: int, eps: Fraction) -> list[Disk]:
    r2 = (1 + eps) ** 2
    return [Disk(Point(*_approx_unit(j, k)), r2) for j in range(k)]


def gen_polygon_arrangement(k: int):
    """k congruent disks around the vertices of a (rationally
    approximated) regular k-gon, radius slightly above the circumradius,
    whose inner faces number exactly k^2 - k + 1; plus one point strictly
    inside each face.  Returns (disks, points)."""
    _check_n(k, 2)
    want = k * k - k + 1
    for eps in (Fraction(1, 4), Fraction(1, 8), Fraction(3, 8), Fraction(1, 16)):
        disks = _polygon_disks(k, eps)
        centers = [d.center for d in disks]
        samples = oracle.fixed_radius_sample_points(centers, disks[0].r2)
        faces = _strict_faces(disks, samples)
        if len(faces) == want:
            pts = [faces[m] for m in sorted(faces)]
            return disks, pts
    raise InstanceError(
        f"could not realize {want} inner faces for {k} congruent disks"
    )


def _sqrt_bounds(v: Fraction, prec: int):
    """Rational lo <= sqrt(v) <= hi with hi - lo <= 2^-prec, v >= 0."""
    m = 1 << prec
    s = isqrt((v.numerator * m * m) // v.denominator)
    return Fraction(s, m), Fraction(s + 1, m)


def gen_intermediate(n: int, k: int) -> Instance:
    """Instance with exactly n points and optimum exactly k, for any k
    between bound_sqrt(n) and bound_upper(n).

    A line through the k-disk arrangement of gen_polygon_arrangement
    crosses 2k-1 faces; one point per crossed face gives 2k-1 collinear
    points (forcing optimum >= k), and the remaining n-(2k-1) points go
    into other faces (the k disks still identify, so optimum <= k).
    """
    _check_n(n)
    _check_n(k, 2)
    if not bound_sqrt(n) <= k <= bound_upper(n):
        raise InstanceError(
            f"need bound_sqrt(n) <= k <= bound_upper(n); "
            f"got k={k}, range [{bound_sqrt(n)}, {bound_upper(n)}] for n={n}"
        )
    disks, face_pts = gen_polygon_arrangement(k)
    for off_num, dir_den in ((1, 7), (1, 11), (2, 13), (3, 17), (1, 5), (0, 9)):
        pts = _thread_line(disks, Fraction(off_num, 64), Fraction(1, dir_den))
        if pts is not None:
            break
    else:
        raise InstanceError("no line crossing 2k-1 faces found")
    line_sigs = {_strict_sig(disks, p) for p in pts}
    extras = []
    for p in face_pts:
        if len(pts) + len(extras) >= n:
            break
        if _strict_sig(disks, p) not in line_sigs:
            extras.append(p)
    if len(pts) + len(extras) != n:
        raise InstanceError("not enough distinct faces for the point budget")
    return Instance(
        "Intermediate", {"n": n, "k": k}, pts + extras, {"exact": k}
    )


def _strict_sig(disks, p):
    mask = 0
    for i, d in enumerate(disks):
        q = sq_dist(p, d.center)
        if q == d.r2:
            return None
        if q < d.r2:
            mask |= 1 << i
    return mask


def _thread_line(disks: list[Disk], off: Fraction, slope: Fraction):
    """2k-1 points on the line y = off + slope*x, one strictly inside
    each face the line crosses, or None if the line misses a circle or
    the face signatures do not come out distinct and nonempty."""
    k = len(disks)
    r2 = disks[0].r2
    base = Point(Fraction(0), off)
    d = (Fraction(1), slope)
    a = d[0] * d[0] + d[1] * d[1]
    roots = []  # (-b +- sqrt(disc)) / (2a) as refinable interval pairs
    for disk in disks:
        ex = base.x - disk.center.x
        ey = base.y - disk.center.y
        b = 2 * (ex * d[0] + ey * d[1])
        c = ex * ex + ey * ey - r2
        disc = b * b - 4 * a * c
        if disc <= 0:
            return None
        roots.append((b, disc, -1))
        roots.append((b, disc, +1))
    # refine square-root intervals until all 2k root intervals disjoint
    for prec in (16, 32, 64, 128, 256):
        ivs = []
        for b, disc, sgn in roots:
            lo_s, hi_s = _sqrt_bounds(disc, prec)
            if sgn > 0:
                ivs.append(((-b + lo_s) / (2 * a), (-b + hi_s) / (2 * a)))
            else:
                ivs.append(((-b - hi_s) / (2 * a), (-b - lo_s) / (2 * a)))
        ivs.sort()
        if all(ivs[t][1] < ivs[t + 1][0] for t in range(len(ivs) - 1)):
            break
    else:
        return None
    pts = []
    sigs = set()
    for t in range(len(ivs) - 1):
        mid = (ivs[t][1] + ivs[t + 1][0]) / 2
        p = Point(base.x + mid * d[0], base.y + mid * d[1])
        sig = _strict_sig(disks, p)
        if not sig or sig in sigs:
            return None
        sigs.add(sig)
        pts.append(p)
    return pts


def gen_half_parabola(n: int) -> Instance:
    """n points (i, i^2), i = 1..n, on the right half of a parabola.
    Any circle meets the parabola in at most three of its points
    with nonnegative abscissa, so at least ceil(n/3) disks are needed."""
    _check_n(n)
    pts = [Point(Fraction(i), Fraction(i * i)) for i in range(1, n + 1)]
    return Instance("HalfParabola", {"n": n}, pts, {"lower": -(-n // 3)})
