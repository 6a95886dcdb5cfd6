"""Constructions of identifying disk families for structured point sets.

Each public function returns a list of generalized disks whose
membership signatures are distinct and nonempty on the input points,
i.e. a family that passes :func:`diskident.solver.verify` in identify
mode.  Sizes are guaranteed:

* collinear points:          ceil((n+1)/2) disks
* arbitrary points (greedy): floor(n/2) + 1 half-planes
* general configuration:     2*ceil(n/6) + 1 disks and half-planes
* 2 x n grid:                ceil((n+1)/2) + 1, except sizes
                             {2,3,4,5,7} (one more) and well-placed
                             odd sizes (see identify_grid_2xn)
* m x n grid, half-planes:   m + n - 2
* m x n grid, n >> m:        ceil(n/2) + m - 1
"""

from dataclasses import dataclass
from fractions import Fraction
import itertools

from .geometry import (
    Point,
    Disk,
    HalfPlane,
    GeneralizedDisk,
    GeometryError,
    CollinearPointsError,
    DegenerateConfigurationError,
    orientation,
    sq_dist,
    convex_hull,
    circumdisk,
    all_collinear,
    find_collinear_triple,
    find_cocyclic_quadruple,
    delaunay,
    Triangulation,
)
from . import oracle


class ConstructError(Exception):
    pass


def _check_input(points) -> list[Point]:
    pts = [Point(Fraction(p[0]), Fraction(p[1])) for p in points]
    if not pts:
        raise ConstructError("empty point set")
    if len(set(pts)) != len(pts):
        raise ConstructError("duplicate points")
    return pts


# ---------------------------------------------------------------------------
# collinear point sets


def _run_disk(pts_sorted: list[Point], lo: int, hi: int) -> Disk:
    """Disk containing exactly the consecutive run [lo, hi] of collinear
    points, centered on their line."""
    a, b = pts_sorted[lo], pts_sorted[hi]
    m = Point((a.x + b.x) / 2, (a.y + b.y) / 2)
    span2 = sq_dist(a, b)
    outside = [sq_dist(m, q) for k, q in enumerate(pts_sorted) if not lo <= k <= hi]
    if outside:
        r2 = (span2 / 4 + min(outside)) / 2
    else:
        r2 = span2 / 4 + 1
    return Disk(m, r2)


def identify_collinear(points) -> list[Disk]:
    """Identifying family of ceil((n+1)/2) disks for collinear points.

    Uses overlapping runs of h = ceil(n/2) consecutive points: run i
    covers sorted positions [i, i+h-1] for i = 0..ceil((n+1)/2)-1.
    The signature of position k is the index interval
    [max(0, k-h+1), min(m-1, k)], and those intervals are pairwise
    distinct, so the family identifies.
    """
    pts = _check_input(points)
    if not all_collinear(pts):
        raise CollinearPointsError("points are not collinear")
    n = len(pts)
    order = sorted(range(n), key=lambda i: (pts[i].x, pts[i].y))
    srt = [pts[i] for i in order]
    h = -(-n // 2)
    m = (n + 2) // 2
    return [_run_disk(srt, i, i + h - 1) for i in range(m)]


# ---------------------------------------------------------------------------
# arbitrary point sets: halving half-planes


def _direction_sequence(limit: int):
    """Slopes 0, 1, -1, 1/2, -1/2, 2, -2, 3/2, ... sweeping rational
    directions (1, k) of growing complexity."""
    yield Fraction(0)
    for num in range(1, 2 * limit + 1):
        for den in (2, 1):
            k = Fraction(num, den)
            if k.denominator == den:
                yield k
                yield -k


def _distinct_projection_direction(pts: list[Point]):
    """Direction v = (1, k) along which all projections differ, plus the
    projections themselves."""
    for k in range(0, 4 * len(pts) + 1):
        for kk in (k, -k) if k else (0,):
            v = (Fraction(1), Fraction(kk))
            proj = [p.x + kk * p.y for p in pts]
            if len(set(proj)) == len(pts):
                return v, proj
    raise ConstructError("no direction with distinct projections found")


def identify_greedy_half(points) -> list[HalfPlane]:
    """Identifying family of floor(n/2)+1 half-planes for any point set.

    A first half-plane D takes the ceil(n/2) points on one side of a
    median line L.  Then floor(n/2) rounds each remove the two points
    of a straddling pair on the hull edge of the surviving set that
    crosses L with the largest crossing ordinate: a disk through both
    pair points, centered far along the edge's outward normal, contains
    exactly that pair among the survivors, and D tells the pair apart.
    Signatures are therefore distinct (first containing round disk,
    plus the D bit; an odd leftover point sits in D alone).
    """
    pts = _check_input(points)
    n = len(pts)
    v, proj = _distinct_projection_direction(pts)
    w = (-v[1], v[0])
    order = sorted(range(n), key=lambda i: proj[i])
    nl = n // 2  # points strictly left of the median line
    if nl == 0:
        theta = proj[order[0]] - 1
    else:
        theta = (proj[order[nl - 1]] + proj[order[nl]]) / 2
    # D = the side of L holding ceil(n/2) points
    disks: list[GeneralizedDisk] = [HalfPlane(-v[0], -v[1], -theta)]

    alive = list(range(n))
    while len(alive) >= 2:
        hull_pts = convex_hull([pts[i] for i in alive])
        hn = len(hull_pts)
        # hull edges whose endpoints straddle L (by projection)
        best = None  # (crossing ordinate, straddling pair of point indices)
        for e in range(hn if hn > 2 else 1):
            a, b = hull_pts[e], hull_pts[(e + 1) % hn]
            pa = a.x * v[0] + a.y * v[1]
            pb = b.x * v[0] + b.y * v[1]
            if (pa > theta) == (pb > theta):
                continue
            # surviving points on the support line of (a, b), ordered
            # along it; take the consecutive pair straddling L
            on_line = [i for i in alive if orientation(a, b, pts[i]) == 0]
            on_line.sort(key=lambda i: proj[i])
            pair = None
            for t in range(len(on_line) - 1):
                if (proj[on_line[t]] > theta) != (proj[on_line[t + 1]] > theta):
                    pair = (on_line[t], on_line[t + 1])
                    break
            if pair is None:
                continue
            # crossing ordinate of the support line with L
            dx, dy = b.x - a.x, b.y - a.y
            t = (theta - pa) / (dx * v[0] + dy * v[1])
            cross = Point(a.x + t * dx, a.y + t * dy)
            ordv = cross.x * w[0] + cross.y * w[1]
            if best is None or ordv > best[0]:
                best = (ordv, pair)
        if best is None:
            raise ConstructError("no hull edge crosses the median line")
        i, j = best[1]
        x, y = pts[i], pts[j]
        # disk through x and y centered on their perpendicular bisector,
        # pushed along the edge's outward normal until every other
        # survivor is strictly outside.  Survivors on the support line
        # are outside for any offset (the pair is consecutive there);
        # survivors strictly inside give finite lower bounds.
        m = Point((x.x + y.x) / 2, (x.y + y.y) / 2)
        nx, ny = -(y.y - x.y), y.x - x.x  # normal of the edge
        for u in alive:
            if u not in (i, j) and nx * (pts[u].x - m.x) + ny * (pts[u].y - m.y) > 0:
                nx, ny = -nx, -ny  # flip to the empty (outward) side
                break
        tau = Fraction(1)
        for u in alive:
            if u in (i, j):
                continue
            q = pts[u]
            denom = 2 * (nx * (m.x - q.x) + ny * (m.y - q.y))
            if denom <= 0:
                continue  # on the support line: outside for any offset
            num = sq_dist(m, x) - sq_dist(m, q)
            tau = max(tau, 1 + num / denom)
        c = Point(m.x + tau * nx, m.y + tau * ny)
        r2 = sq_dist(c, x)
        d = Disk(c, r2)
        if not (d.contains(x) and d.contains(y)):
            raise ConstructError("pair disk construction failed")
        for u in alive:
            if u not in (i, j) and d.contains(pts[u]):
                raise ConstructError("pair disk contains a third survivor")
        disks.append(d)
        alive.remove(i)
        alive.remove(j)
    return disks


# ---------------------------------------------------------------------------
# six-partition and general-configuration construction


@dataclass
class SixPartition:
    """Three concurrent lines splitting the plane into six sectors, each
    holding between ceil(n/6)-1 and ceil(n/6) of the points."""

    apex: Point
    lines: list[tuple]  # (a, b, c) with line a x + b y = c through apex
    region_label: list[str]  # per input point, one of 'a'..'f'
    halfplanes: list[HalfPlane]  # H1 ⊇ abc, H2 ⊇ efa, H3 ⊇ cde

    def counts(self) -> dict:
        out = {lab: 0 for lab in "abcdef"}
        for lab in self.region_label:
            out[lab] += 1
        return out


_SECTOR_HP = {  # which of (H1, H2, H3) contains each sector
    "a": (True, True, False),
    "b": (True, False, False),
    "c": (True, False, True),
    "d": (False, False, True),
    "e": (False, True, True),
    "f": (False, True, False),
}


def six_partition(points) -> SixPartition:
    """Partition of the plane by three concurrent lines into six sectors
    with ceil(n/6)-1 or ceil(n/6) points each, no point on a line.

    Requires no three points collinear.  The cyclic sector order is
    a, b, c, d, e, f with d opposite a; three half-planes H1 = {a,b,c},
    H2 = {e,f,a}, H3 = {c,d,e} then give each sector a distinct
    nonempty half-plane signature.
    """
    pts = _check_input(points)
    n = len(pts)
    tri = find_collinear_triple(pts)
    if tri is not None and n >= 3:
        raise DegenerateConfigurationError(
            f"three collinear points at indices {tri}", tri
        )
    q = -(-n // 6)
    for kk in _direction_sequence(4 * n + 4):
        v = (Fraction(1), Fraction(kk))
        proj = [p.x + kk * p.y for p in pts]
        if len(set(proj)) != n:
            continue
        w = (-v[1], v[0])
        order = sorted(range(n), key=lambda i: proj[i])
        lo_nl = max(0, 3 * q - 3, n - 3 * q)
        hi_nl = min(n, 3 * q, n - max(0, 3 * q - 3))
        for nl in range(lo_nl, hi_nl + 1):
            if nl == 0:
                theta = proj[order[0]] - 1
            elif nl == n:
                theta = proj[order[-1]] + 1
            else:
                theta = (proj[order[nl - 1]] + proj[order[nl]]) / 2
            sp = _six_split(pts, proj, v, w, theta, q)
            if sp is not None:
                return sp
    raise ConstructError("six-partition search failed")


def _six_split(pts, proj, v, w, theta, q):
    n = len(pts)
    k = v[1]
    # L1 = {p·v = theta}; base point and direction of L1
    den = 1 + k * k
    base = Point(theta / den, theta * k / den)
    # apex candidates on L1: between consecutive crossings with pair lines
    events = set()
    for i, j in itertools.combinations(range(n), 2):
        ex, ey = pts[j].x - pts[i].x, pts[j].y - pts[i].y
        c1 = ex * w[1] - ey * w[0]
        if c1 == 0:
            continue
        c0 = ex * (base.y - pts[i].y) - ey * (base.x - pts[i].x)
        events.add(c0 / c1)
    ev = sorted(events)
    if ev:
        apexes = [ev[0] - 1, ev[-1] + 1]
        apexes += [(ev[t] + ev[t + 1]) / 2 for t in range(len(ev) - 1)]
    else:
        apexes = [Fraction(0)]
    for t in apexes:
        A = Point(base.x + t * w[0], base.y + t * w[1])
        sp = _six_at_apex(pts, proj, v, w, theta, q, A)
        if sp is not None:
            return sp
    return None


def _six_at_apex(pts, proj, v, w, theta, q, A):
    n = len(pts)
    right = [proj[i] > theta for i in range(n)]
    slope = []
    for i in range(n):
        u = (pts[i].x - A.x, pts[i].y - A.y)
        if not right[i]:
            u = (-u[0], -u[1])
        duv = u[0] * v[0] + u[1] * v[1]
        if duv <= 0:
            return None
        slope.append((u[0] * w[0] + u[1] * w[1]) / duv)
    order = sorted(range(n), key=lambda i: slope[i])
    ts = [slope[i] for i in order]
    if len(set(ts)) != n:
        return None  # apex on a pair line; try the next one
    # prefix counts of right/left points by slope order
    rp = [0] * (n + 1)
    for t, i in enumerate(order):
        rp[t + 1] = rp[t] + (1 if right[i] else 0)
    rtot = rp[n]
    ok = lambda c: q - 1 <= c <= q
    for ga in range(n + 1):
        if not (ok(rp[ga]) and ok(ga - rp[ga])):
            continue
        for gb in range(ga + 1, n + 1):
            r2c, l2c = rp[gb] - rp[ga], (gb - ga) - (rp[gb] - rp[ga])
            r3c, l3c = rtot - rp[gb], (n - gb) - (rtot - rp[gb])
            if ok(r2c) and ok(l2c) and ok(r3c) and ok(l3c):
                return _six_build(pts, v, w, theta, A, ts, slope, right, ga, gb, q)
    return None


def _gap_value(ts, g):
    if g == 0:
        return ts[0] - 1
    if g == len(ts):
        return ts[-1] + 1
    return (ts[g - 1] + ts[g]) / 2


def _six_build(pts, v, w, theta, A, ts, slope, right, ga, gb, q):
    sa, sb = _gap_value(ts, ga), _gap_value(ts, gb)
    labels = []
    for i in range(len(pts)):
        t = slope[i]
        if right[i]:
            lab = "a" if t < sa else ("b" if t < sb else "c")
        else:
            lab = "d" if t < sa else ("e" if t < sb else "f")
        labels.append(lab)
    n2 = (w[0] - sa * v[0], w[1] - sa * v[1])
    n3 = (w[0] - sb * v[0], w[1] - sb * v[1])
    h1 = HalfPlane(-v[0], -v[1], -theta)
    h2 = HalfPlane(n2[0], n2[1], n2[0] * A.x + n2[1] * A.y)
    h3 = HalfPlane(-n3[0], -n3[1], -(n3[0] * A.x + n3[1] * A.y))
    lines = [
        (v[0], v[1], theta),
        (n2[0], n2[1], n2[0] * A.x + n2[1] * A.y),
        (n3[0], n3[1], n3[0] * A.x + n3[1] * A.y),
    ]
    sp = SixPartition(A, lines, labels, [h1, h2, h3])
    # exact validation: counts, strict sides, and half-plane membership
    for c in sp.counts().values():
        if not q - 1 <= c <= q:
            raise ConstructError("six-partition region count out of range")
    for i, p in enumerate(pts):
        for a, b, c in lines:
            if a * p.x + b * p.y == c:
                raise ConstructError("point on a partition line")
        want = _SECTOR_HP[labels[i]]
        got = (h1.contains(p), h2.contains(p), h3.contains(p))
        if want != got:
            raise ConstructError("half-plane signature mismatch in six-partition")
    return sp


def trichromatic_triangle(tri: Triangulation, labels) -> tuple:
    """First triangle of the triangulation whose three vertices carry
    three distinct labels.  Requires all three labels present; existence
    is guaranteed when the label classes cannot be separated without a
    rainbow simplex (Sperner-type argument)."""
    labels = list(labels)
    if len(labels) != len(tri.vertices):
        raise ConstructError("one label per triangulated point required")
    if len(set(labels)) != 3:
        raise ConstructError("exactly three label classes required")
    for t in tri.triangles:
        if len({labels[i] for i in t}) == 3:
            return t
    raise ConstructError("no trichromatic triangle found")


def identify_general_position(points) -> list[GeneralizedDisk]:
    """Identifying family of 2*ceil(n/6)+1 generalized disks for points
    in general configuration (no 3 collinear, no 4 cocyclic).

    Three half-planes from a six-partition give each sector a distinct
    signature; then ceil(n/6)-1 rounds per alternating sector triple
    peel off an empty-circumdisk triangle with one vertex in each
    sector, refining signatures inside the sectors.
    """
    pts = _check_input(points)
    n = len(pts)
    tri = find_collinear_triple(pts)
    if tri is not None:
        raise DegenerateConfigurationError(
            f"three collinear points at indices {tri}", tri
        )
    quad = find_cocyclic_quadruple(pts)
    if quad is not None:
        raise DegenerateConfigurationError(
            f"four cocyclic points at indices {quad}", quad
        )
    sp = six_partition(pts)
    disks: list[GeneralizedDisk] = list(sp.halfplanes)
    q = -(-n // 6)
    by_label: dict[str, list[int]] = {lab: [] for lab in "abcdef"}
    for i, lab in enumerate(sp.region_label):
        by_label[lab].append(i)
    for trio in (("a", "c", "e"), ("b", "d", "f")):
        pools = {lab: list(by_label[lab]) for lab in trio}
        for _ in range(q - 1):
            if any(not pools[lab] for lab in trio):
                raise ConstructError("sector pool exhausted early")
            idxs = sorted(pools[trio[0]] + pools[trio[1]] + pools[trio[2]])
            sub = [pts[i] for i in idxs]
            labs = [sp.region_label[i] for i in idxs]
            t = delaunay(sub)
            a, b, c = trichromatic_triangle(t, labs)
            d = circumdisk(sub[a], sub[b], sub[c])
            for si, p in enumerate(sub):
                inside = d.contains(p)
                if inside != (si in (a, b, c)):
                    raise ConstructError("circumdisk not empty of survivors")
            disks.append(d)
            for si in (a, b, c):
                pools[labs[si]].remove(idxs[si])
    return disks


# ---------------------------------------------------------------------------
# grids


def grid_points(m: int, n: int) -> list[Point]:
    """The m x n integer grid {1..n} x {1..m}, row-major from the bottom
    row: index (r-1)*n + (x-1) is the point (x, r)."""
    if m < 1 or n < 1:
        raise ConstructError("grid dimensions must be positive")
    return [Point(Fraction(x), Fraction(y)) for y in range(1, m + 1) for x in range(1, n + 1)]


def _grid2_realize(n: int, spec) -> Disk:
    """Disk on the 2 x n grid containing exactly columns a..b of the
    bottom row and c..d of the top row (1-based, empty if a > b)."""
    a, b, c, d = spec
    mask = 0
    for x in range(a, b + 1):
        mask |= 1 << (x - 1)
    for x in range(c, d + 1):
        mask |= 1 << (n + x - 1)
    disk = oracle.realize_subset(grid_points(2, n), mask)
    if disk is None:
        raise ConstructError(f"grid subset {spec} not realizable on 2x{n}")
    return disk


def _grid2_odd_specs(N: int) -> list[tuple]:
    """Disk column-specs (bottom-from, bottom-to, top-from, top-to)
    identifying the 2 x N grid with ceil((N+1)/2) disks, N odd >= 9."""
    if N == 9:
        return [(1, 8, 4, 5), (2, 4, 1, 6), (4, 9, 5, 7), (3, 6, 2, 8), (6, 7, 3, 9)]
    if N % 4 == 1:
        p = (N - 1) // 4
        specs = [
            (1, 3 * p + 1, p + 2, 2 * p),
            (p + 2, 2 * p, 1, 3 * p + 1),
            (p + 1, 4 * p + 1, 2 * p + 2, 3 * p),
            (2 * p + 2, 3 * p, p + 1, 4 * p + 1),
            (p, p + 2, p, p + 2),
            (3 * p, 3 * p + 2, 3 * p, 3 * p + 2),
        ]
        for j in list(range(2, p)) + list(range(p + 4, 2 * p + 1)):
            specs.append((j, 4 * p + 2 - j, j, 4 * p + 2 - j))
        return specs
    # N % 4 == 3: take the family for N+2 columns, delete the outermost
    # columns, drop the one disk that becomes redundant, and shift
    p = (N + 1) // 4
    out = []
    for a, b, c, d in _grid2_odd_specs(N + 2):
        if (a, b, c, d) == (2, 4 * p, 2, 4 * p):
            continue
        a, b = max(a, 2) - 1, min(b, N + 1) - 1
        c, d = max(c, 2) - 1, min(d, N + 1) - 1
        out.append((a, b, c, d))
    return out


def identify_grid_2xn(n: int) -> list[GeneralizedDisk]:
    """Optimal identifying family for the 2 x n grid.

    Sizes: ceil((n+1)/2) + 1 for n in {2,3,4,5,7} (column runs plus one
    half-plane), ceil((n+1)/2) disks otherwise; even n >= 8 reuses the
    family for n+1 columns with the last column deleted.
    """
    if n < 2:
        raise ConstructError("2xn grid needs n >= 2")
    if n in (2, 3, 4, 5, 7):
        h = -(-n // 2)
        m = (n + 2) // 2
        fam: list[GeneralizedDisk] = [
            _grid2_realize(n, (i, i + h - 1, i, i + h - 1)) for i in range(1, m + 1)
        ]
        fam.append(HalfPlane(Fraction(0), Fraction(-1), Fraction(-3, 2)))
        return fam
    if n == 6:
        specs = [(1, 5, 3, 4), (3, 6, 4, 5), (2, 3, 1, 5), (4, 4, 2, 6)]
        return [_grid2_realize(6, s) for s in specs]
    if n % 2 == 1:
        return [_grid2_realize(n, s) for s in _grid2_odd_specs(n)]
    # even n >= 8: family for n+1 columns restricted to the first n
    fam = []
    for a, b, c, d in _grid2_odd_specs(n + 1):
        spec = (a, min(b, n), c, min(d, n))
        if spec[0] > spec[1] and spec[2] > spec[3]:
            raise ConstructError("restricted grid disk became empty")
        fam.append(_grid2_realize(n, spec))
    return fam


def _row_halfplanes(m: int) -> list[HalfPlane]:
    """m-1 half-planes separating the rows of an m-row grid: upward
    half-planes y >= k + 1/2 for k = 1..m-2 and one downward
    half-plane y <= m - 1/2, so every row is covered."""
    hps = [
        HalfPlane(Fraction(0), Fraction(-1), -(k + Fraction(1, 2)))
        for k in range(1, m - 1)
    ]
    hps.append(HalfPlane(Fraction(0), Fraction(1), m - Fraction(1, 2)))
    return hps


def identify_grid_halfplanes(m: int, n: int) -> list[HalfPlane]:
    """m + n - 2 axis-parallel half-planes identifying the m x n grid,
    m, n >= 3: row separators plus rightward half-planes x >= j + 1/2."""
    if m < 3 or n < 3:
        raise ConstructError("half-plane grid construction needs m, n >= 3")
    hps = _row_halfplanes(m)
    hps += [
        HalfPlane(Fraction(-1), Fraction(0), -(j + Fraction(1, 2)))
        for j in range(1, n)
    ]
    return hps


def identify_grid_long(m: int, n: int) -> list[GeneralizedDisk]:
    """ceil(n/2) + m - 1 generalized disks identifying the m x n grid
    when the grid is long: m >= 3 and 2n >= m^2 - 6.

    m - 1 half-planes separate the rows; ceil(n/2) congruent disks
    centered on the horizontal midline at consecutive integer offsets
    separate the columns.  The squared radius is picked so that on each
    row the disks span between ceil(n/2)-1 and ceil(n/2) columns, which
    keeps the per-row column signatures a strictly shifting staircase.
    """
    if m < 3:
        raise ConstructError("long grid construction needs m >= 3")
    if 2 * n < m * m - 6:
        raise ConstructError("long grid construction needs 2n >= m^2 - 6")
    h = -(-n // 2)
    cy = Fraction(m + 1, 2)
    dy_min = Fraction(0) if m % 2 else Fraction(1, 2)
    lo = Fraction((h - 1) ** 2 + (m - 1) ** 2, 4)
    hi = Fraction((h + 1) ** 2, 4) + dy_min * dy_min
    if lo < hi:
        fam: list[GeneralizedDisk] = [
            Disk(Point(Fraction(h + 1, 2) + k, cy), (lo + hi) / 2) for k in range(h)
        ]
    else:
        # single-disk 3x2 case: a midline center nudged off column 1
        # holds column 1 in all rows and excludes column 2
        fam = [
            Disk(Point(Fraction(h + 1, 2) + k - Fraction(1, 10), cy), lo + Fraction(1, 10))
            for k in range(h)
        ]
    fam += _row_halfplanes(m)
    from . import solver

    if not solver.verify(grid_points(m, n), fam).is_valid:
        raise ConstructError(f"long grid family invalid for {m}x{n}")
    return fam
