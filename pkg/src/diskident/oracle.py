"""Enumeration of the disk-realizable subsets of a planar point set.

A subset S of a finite point set P is *realizable* when S = P ∩ D for
some closed disk D (half-planes arise as unbounded limits of disks, but
every subset realizable by a half-plane is also realizable by a disk
with rational data, so witnesses are always disks).

The free-radius enumeration rests on the lifting identity

    p ∈ Disk(c, r²)  ⇔  f_p(c) ≤ w,   f_p(c) = |p|² − 2 p·c,  w = r² − |c|².

For a fixed center c the realizable subsets are prefixes of the points
sorted by f_p(c); the sort order only changes across the perpendicular
bisector lines of point pairs.  Sampling the midpoint of every edge of
that line arrangement and perturbing symbolically in both normal
directions therefore visits every cell, which yields the complete
subset family.  All arithmetic is exact (integers after denominator
scaling; `fractions.Fraction` at the boundaries).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt, lcm
from typing import Optional

from .geometry import (
    Disk,
    GeneralizedDisk,
    GeometryError,
    Point,
    all_collinear,
    circumcenter,
    orientation,
    scale_to_ints,
    sq_dist,
)


class OracleError(GeometryError):
    """Invalid oracle input or a failed internal witness check."""


@dataclass
class Hypergraph:
    """Point set plus the family of disk-realizable subsets.

    Each edge is (mask, witness): ``mask`` has bit i set iff point i is
    in the subset, and ``witness`` is a concrete disk whose membership
    vector equals the mask exactly.  Edges are sorted by mask.
    """

    points: list[Point]
    edges: list[tuple[int, GeneralizedDisk]]

    def masks(self) -> set[int]:
        return {m for m, _ in self.edges}

    def witness(self, mask: int) -> Optional[GeneralizedDisk]:
        for m, d in self.edges:
            if m == mask:
                return d
        return None


def _check_points(points: list[Point]) -> None:
    if not points:
        raise OracleError("empty point set")
    if len(set(points)) != len(points):
        raise OracleError("duplicate points")


def _verify_mask(points: list[Point], disk: GeneralizedDisk, mask: int) -> None:
    for i, p in enumerate(points):
        if disk.contains(p) != bool(mask >> i & 1):
            raise OracleError(f"internal: witness membership mismatch at point {i}")


# ---------------------------------------------------------------------------
# free radius


def realizable_subsets(points: list[Point]) -> Hypergraph:
    """All nonempty subsets S with S = P ∩ D for some closed disk D."""
    pts = list(points)
    _check_points(pts)
    n = len(pts)
    if n == 1:
        return Hypergraph(pts, [(1, Disk(pts[0], Fraction(1)))])
    P, scale = scale_to_ints(pts)
    sq = [x * x + y * y for x, y in P]

    lines = []  # bisector of (i,j):  a x + b y = e
    for i in range(n):
        for j in range(i + 1, n):
            a = 2 * (P[j][0] - P[i][0])
            b = 2 * (P[j][1] - P[i][1])
            e = sq[j] - sq[i]
            lines.append((a, b, e))

    contexts: dict[int, tuple] = {}
    rng = range(n)
    for a, b, e in lines:
        g = a * a + b * b
        p0x = Fraction(a * e, g)
        p0y = Fraction(b * e, g)
        dx, dy = -b, a  # direction along the line; (a,b) is the normal
        ts = set()
        for a2, b2, e2 in lines:
            den = a2 * dx + b2 * dy
            if den == 0:
                continue
            ts.add((e2 - a2 * p0x - b2 * p0y) / den)
        if ts:
            tl = sorted(ts)
            samples = [tl[0] - 1]
            samples += [(tl[k] + tl[k + 1]) / 2 for k in range(len(tl) - 1)]
            samples.append(tl[-1] + 1)
        else:
            samples = [Fraction(0)]
        # f changes by −2δ(p·A) − 2δ²(p·d) under c → c + δA + δ²d, so the
        # perturbed order is the lexicographic order on the keys below.
        t1 = [-(P[i][0] * a + P[i][1] * b) for i in rng]
        t2 = [-(P[i][0] * dx + P[i][1] * dy) for i in rng]
        for t in samples:
            qx_f = p0x + t * dx
            qy_f = p0y + t * dy
            qden = lcm(qx_f.denominator, qy_f.denominator)
            qx = int(qx_f * qden)
            qy = int(qy_f * qden)
            f = [sq[i] * qden - 2 * (P[i][0] * qx + P[i][1] * qy) for i in rng]
            for s1 in (1, -1):
                for s2 in (1, -1):
                    order = sorted(rng, key=lambda i: (f[i], s1 * t1[i], s2 * t2[i]))
                    m = 0
                    for i in order:
                        m |= 1 << i
                        if m not in contexts:
                            contexts[m] = (qx, qy, qden, a, b, dx, dy, s1, s2)

    edges = []
    for m in sorted(contexts):
        edges.append((m, _disk_from_context(P, sq, m, contexts[m], scale, n)))
    for i in rng:  # closed disks realize every singleton
        if (1 << i) not in contexts:
            raise OracleError("internal: missing singleton subset")
    return Hypergraph(pts, edges)


def _disk_from_context(P, sq, mask, ctx, scale, n):
    """Concrete witness disk for a subset discovered at a perturbed sample.

    Shrinks the perturbation c = q + δ s1 A + δ² s2 d by halving δ until
    the subset's f-values separate strictly from the rest, then places
    the disk threshold halfway into the gap.  Exact integer arithmetic
    in the scaled frame; the result is mapped back to the input frame.
    """
    qx, qy, qden, ax, ay, dx, dy, s1, s2 = ctx
    for t in range(64):
        den = qden << (2 * t)
        cx = (qx << (2 * t)) + s1 * ax * qden * (1 << t) + s2 * dx * qden
        cy = (qy << (2 * t)) + s1 * ay * qden * (1 << t) + s2 * dy * qden
        f = [sq[i] * den - 2 * (P[i][0] * cx + P[i][1] * cy) for i in range(n)]
        mx = max(f[i] for i in range(n) if mask >> i & 1)
        rest = [f[i] for i in range(n) if not mask >> i & 1]
        if rest:
            mn = min(rest)
            if mx >= mn:
                continue
            w = Fraction(mx + mn, 2 * den)
        else:
            w = Fraction(mx, den) + 1
        for i in range(n):  # exact membership: f_i ≤ w
            if (f[i] * w.denominator <= w.numerator * den) != bool(mask >> i & 1):
                raise OracleError("internal: witness membership mismatch")
        cxf = Fraction(cx, den)
        cyf = Fraction(cy, den)
        center = Point(cxf / scale, cyf / scale)
        r2 = (w + cxf * cxf + cyf * cyf) / (scale * scale)
        return Disk(center, r2)
    raise OracleError("internal: perturbation failed to separate subset")


def naive_realizable_masks(points: list[Point]) -> set[int]:
    """Independent brute-force enumeration of realizable subsets (masks only).

    Cross-check for realizable_subsets, using a different argument: any
    realizable proper subset S has a witness whose center can be slid to
    the perpendicular bisector of some pair (i inside, j outside) while
    all other separations stay strict.  So it suffices to walk every
    pair's bisector, sample between the finitely many order-change
    events, and toggle the tied pair in and out.
    """
    pts = list(points)
    _check_points(pts)
    n = len(pts)
    if n == 1:
        return {1}
    sq = [p.x * p.x + p.y * p.y for p in pts]

    def fval(k: int, cx: Fraction, cy: Fraction) -> Fraction:
        return sq[k] - 2 * (pts[k].x * cx + pts[k].y * cy)

    masks = {(1 << n) - 1}
    for i in range(n):
        for j in range(i + 1, n):
            mx = (pts[i].x + pts[j].x) / 2
            my = (pts[i].y + pts[j].y) / 2
            dx = -(pts[j].y - pts[i].y)
            dy = pts[j].x - pts[i].x
            ts = set()
            for k in range(n):
                if k in (i, j):
                    continue
                # f_k(c(t)) = f_i(c(t)) is affine in t
                slope = -2 * ((pts[k].x - pts[i].x) * dx + (pts[k].y - pts[i].y) * dy)
                if slope == 0:
                    continue
                at0 = fval(k, mx, my) - fval(i, mx, my)
                ts.add(-at0 / slope)
            if ts:
                tl = sorted(ts)
                samples = [tl[0] - 1]
                samples += [(tl[k] + tl[k + 1]) / 2 for k in range(len(tl) - 1)]
                samples.append(tl[-1] + 1)
            else:
                samples = [Fraction(0)]
            for t in samples:
                cx = mx + t * dx
                cy = my + t * dy
                v = fval(i, cx, cy)
                assert fval(j, cx, cy) == v
                base = 0
                for k in range(n):
                    if k not in (i, j) and fval(k, cx, cy) < v:
                        base |= 1 << k
                for extra in (0, 1 << i, 1 << j, (1 << i) | (1 << j)):
                    if base | extra:
                        masks.add(base | extra)
    return masks


# ---------------------------------------------------------------------------
# fixed radius


def _rat_sqrt_between(lo: Fraction, hi: Fraction) -> Fraction:
    """A rational x ≥ 0 with lo < x² ≤ hi, given 0 ≤ lo < hi."""
    k = 4
    while True:
        m = 1 << k
        num = isqrt((hi.numerator * m * m) // hi.denominator)
        x = Fraction(num, m)
        if x * x > lo:
            return x
        k += 4


def realizable_subsets_fixed_r(points: list[Point], r2) -> Hypergraph:
    """Nonempty subsets realizable by disks of squared radius exactly r2.

    Exact on collinear inputs (a disk meets a line in an interval, so
    the family is the set of consecutive runs of span ≤ 2r, with a
    feasibility check when the span is exactly 2r).  On non-collinear
    inputs the family is found by exact signature evaluation at a rich
    set of rational candidate centers (the points themselves, pair
    midpoints, triple circumcenters, and rational approximations of
    circle-circle intersections, each with multi-scale perturbations);
    every emitted edge is certified by its witness, and the degenerate
    subsets whose center region is a single point (a pair at distance
    exactly 2r, a triple of circumradius exactly r) are covered exactly
    by the midpoint/circumcenter candidates.
    """
    pts = list(points)
    _check_points(pts)
    r2 = Fraction(r2)
    if r2 <= 0:
        raise OracleError("squared radius must be positive")
    if all_collinear(pts):
        return _fixed_r_collinear(pts, r2)
    return _fixed_r_general(pts, r2)


def _fixed_r_collinear(pts: list[Point], r2: Fraction) -> Hypergraph:
    n = len(pts)
    if n == 1:
        return Hypergraph(pts, [(1, Disk(pts[0], r2))])
    dx = pts[1].x - pts[0].x
    dy = pts[1].y - pts[0].y
    proj = [(p.x - pts[0].x) * dx + (p.y - pts[0].y) * dy for p in pts]
    order = sorted(range(n), key=lambda k: proj[k])
    nx, ny = -dy, dx  # normal to the carrier line
    g = nx * nx + ny * ny
    edges: dict[int, Disk] = {}
    for a in range(n):
        for b in range(a, n):
            lo, hi = order[a], order[b]
            span2 = sq_dist(pts[lo], pts[hi])
            if span2 > 4 * r2:
                break
            mask = 0
            for k in order[a : b + 1]:
                mask |= 1 << k
            m = Point((pts[lo].x + pts[hi].x) / 2, (pts[lo].y + pts[hi].y) / 2)
            outside = [sq_dist(m, pts[k]) for k in order[:a] + order[b + 1 :]]
            cap = r2 - span2 / 4  # largest allowed squared normal offset
            if not outside or r2 - min(outside) < 0:
                disk = Disk(m, r2)
            else:
                need = r2 - min(outside)  # offset must exceed this
                if cap == 0:
                    continue  # span exactly 2r but an outsider is too close
                mu = _rat_sqrt_between(need / g, cap / g)
                disk = Disk(Point(m.x + mu * nx, m.y + mu * ny), r2)
            _verify_mask(pts, disk, mask)
            edges[mask] = disk
    return Hypergraph(pts, sorted(edges.items()))


def _fixed_r_candidates(pts: list[Point], r2: Fraction) -> list[Point]:
    """Rational candidate centers sampling every cell of the arrangement
    of the n circles of squared radius r2 around the points."""
    n = len(pts)
    r_apx = _rat_sqrt_between(r2 / 2, r2)
    centers: list[Point] = list(pts)
    for i in range(n):
        for j in range(i + 1, n):
            d2 = sq_dist(pts[i], pts[j])
            if d2 > 4 * r2:
                continue
            m = Point((pts[i].x + pts[j].x) / 2, (pts[i].y + pts[j].y) / 2)
            centers.append(m)
            if d2 < 4 * r2:
                ux = -(pts[j].y - pts[i].y)
                uy = pts[j].x - pts[i].x
                s2 = (4 * r2 - d2) / (4 * d2)
                s = _rat_sqrt_between(s2 * Fraction(255, 256), s2)
                centers.append(Point(m.x + s * ux, m.y + s * uy))
                centers.append(Point(m.x - s * ux, m.y - s * uy))
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                if orientation(pts[i], pts[j], pts[k]) == 0:
                    continue
                cc = circumcenter(pts[i], pts[j], pts[k])
                if sq_dist(cc, pts[i]) <= 4 * r2:
                    centers.append(cc)
    dirs = ((1, 0), (0, 1), (-1, 0), (0, -1), (1, 1), (1, -1), (-1, 1), (-1, -1))
    scales = [r_apx / (1 << k) for k in (2, 5, 9, 13)]
    out: list[Point] = []
    for c in centers:
        out.append(c)
        for eps in scales:
            for ax, ay in dirs:
                out.append(Point(c.x + eps * ax, c.y + eps * ay))
    return out


def _fixed_r_general(pts: list[Point], r2: Fraction) -> Hypergraph:
    edges: dict[int, Disk] = {}
    for cand in _fixed_r_candidates(pts, r2):
        mask = 0
        for i, p in enumerate(pts):
            if sq_dist(cand, p) <= r2:
                mask |= 1 << i
        if mask and mask not in edges:
            edges[mask] = Disk(cand, r2)
    return Hypergraph(pts, sorted(edges.items()))


def fixed_radius_sample_points(points: list[Point], r2) -> list[Point]:
    """Rational sample centers covering the cells of n congruent circles.

    Helper for arrangement-face counting: returns candidate locations
    whose exact membership signatures against Disk(p_i, r2) span the
    cells of the circle arrangement (certified by the caller).
    """
    pts = list(points)
    _check_points(pts)
    return _fixed_r_candidates(pts, Fraction(r2))


# ---------------------------------------------------------------------------
# prescribed subsets


def realize_subset(points: list[Point], mask: int, r2=None) -> Optional[GeneralizedDisk]:
    """Witness disk whose membership vector equals mask, or None.

    Free radius (r2 is None) is decided exactly: the feasible centers
    form the open convex region {c : f_i(c) < f_j(c) ∀ i∈S, j∉S}, whose
    nonemptiness is settled by Fourier–Motzkin elimination on the two
    center coordinates.  Fixed radius looks the mask up in the
    fixed-radius enumeration.
    """
    pts = list(points)
    _check_points(pts)
    n = len(pts)
    if mask <= 0 or mask >= 1 << n:
        raise OracleError("subset mask out of range")
    if r2 is not None:
        return realizable_subsets_fixed_r(pts, r2).witness(mask)
    sq = [p.x * p.x + p.y * p.y for p in pts]
    ins = [i for i in range(n) if mask >> i & 1]
    outs = [j for j in range(n) if not mask >> j & 1]
    cons = []  # a x + b y < e, from f_i(c) < f_j(c)
    for i in ins:
        for j in outs:
            cons.append(
                (
                    2 * (pts[j].x - pts[i].x),
                    2 * (pts[j].y - pts[i].y),
                    sq[j] - sq[i],
                )
            )
    sol = _solve_strict_2d(cons)
    if sol is None:
        return None
    cx, cy = sol
    f = [sq[i] - 2 * (pts[i].x * cx + pts[i].y * cy) for i in range(n)]
    mx = max(f[i] for i in ins)
    w = (mx + min(f[j] for j in outs)) / 2 if outs else mx + 1
    disk = Disk(Point(cx, cy), w + cx * cx + cy * cy)
    _verify_mask(pts, disk, mask)
    return disk


def _solve_strict_2d(cons):
    """Interior point of {(x,y) : a x + b y < e for all rows}, or None."""
    cons = [(Fraction(a), Fraction(b), Fraction(e)) for a, b, e in cons]
    uppers = [r for r in cons if r[0] > 0]
    lowers = [r for r in cons if r[0] < 0]
    ycons = [(b, e) for a, b, e in cons if a == 0]
    for a1, b1, e1 in uppers:
        for a2, b2, e2 in lowers:
            ycons.append((a1 * b2 - a2 * b1, a1 * e2 - a2 * e1))
    lo = hi = None
    for bb, ee in ycons:
        if bb == 0:
            if ee <= 0:
                return None
        elif bb > 0:
            v = ee / bb
            hi = v if hi is None or v < hi else hi
        else:
            v = ee / bb
            lo = v if lo is None or v > lo else lo
    if lo is not None and hi is not None and lo >= hi:
        return None
    if lo is None and hi is None:
        y = Fraction(0)
    elif lo is None:
        y = hi - 1
    elif hi is None:
        y = lo + 1
    else:
        y = (lo + hi) / 2
    xlo = xhi = None
    for a, b, e in cons:
        if a == 0:
            continue
        v = (e - b * y) / a
        if a > 0:
            xhi = v if xhi is None or v < xhi else xhi
        else:
            xlo = v if xlo is None or v > xlo else xlo
    if xlo is not None and xhi is not None and xlo >= xhi:
        return None
    if xlo is None and xhi is None:
        x = Fraction(0)
    elif xlo is None:
        x = xhi - 1
    elif xhi is None:
        x = xlo + 1
    else:
        x = (xlo + xhi) / 2
    return (x, y)
