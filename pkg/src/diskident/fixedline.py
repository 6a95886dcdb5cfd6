"""Linear-time optimal identification of collinear points with a fixed radius.

Points sit at (x_i, 0) with x_1 < … < x_n, all disks have squared
radius r2.  A disk meets the line in an interval, so a family is
described combinatorially by the runs of consecutive points each disk
covers; a run is realizable iff its span is at most the diameter.  The
greedy single pass below emits the minimum family: it opens a pair
disk, chains overlapping triple disks while the spacing allows, and
falls back to singletons across large gaps.  All comparisons are on
squared gaps against 4·r2, so the pass is exact and scale-invariant.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .geometry import Disk, Point
from .oracle import _rat_sqrt_between


class FixedLineError(ValueError):
    """Invalid line instance or disk family."""


@dataclass(frozen=True)
class LineInstance:
    xs: tuple[Fraction, ...]
    r2: Fraction

    def __post_init__(self):
        xs = tuple(Fraction(x) for x in self.xs)
        object.__setattr__(self, "xs", xs)
        object.__setattr__(self, "r2", Fraction(self.r2))
        if not xs:
            raise FixedLineError("empty instance")
        if any(xs[i] >= xs[i + 1] for i in range(len(xs) - 1)):
            raise FixedLineError("abscissas must be strictly increasing")
        if self.r2 <= 0:
            raise FixedLineError("squared radius must be positive")

    @property
    def n(self) -> int:
        return len(self.xs)

    def points(self) -> list[Point]:
        return [Point(x, Fraction(0)) for x in self.xs]


@dataclass(frozen=True)
class IntervalDisk:
    """Inclusive run of covered point indices (0-based)."""

    lo: int
    hi: int

    def __post_init__(self):
        if self.lo > self.hi:
            raise FixedLineError("empty interval disk")

    def covers(self, k: int) -> bool:
        return self.lo <= k <= self.hi


def identify_fixed_r_linear(inst: LineInstance, stats: Optional[dict] = None) -> list[IntervalDisk]:
    """Minimum identifying family of radius-r disks as point runs.

    Single left-to-right pass; gaps beyond the last point count as
    infinite.  If ``stats`` is given, stats['gap_checks'] receives the
    number of gap comparisons performed (a linear-time witness).
    """
    xs, r2, n = inst.xs, inst.r2, inst.n
    checks = 0

    def wide(a: int, b: int) -> bool:
        """True iff the gap from point a to point b exceeds the diameter."""
        nonlocal checks
        checks += 1
        if b >= n:
            return True
        g = xs[b] - xs[a]
        return g * g > 4 * r2

    disks: list[IntervalDisk] = []
    i = 0
    while i < n:
        if wide(i, i + 1) or wide(i + 1, i + 2):
            disks.append(IntervalDisk(i, i))
            i += 1
        else:
            disks.append(IntervalDisk(i, i + 1))
            i += 1
            while not wide(i, i + 2) and not wide(i + 2, i + 3):
                disks.append(IntervalDisk(i, i + 2))
                i += 2
            disks.append(IntervalDisk(i, i + 1))
            i += 2
    if stats is not None:
        stats["gap_checks"] = checks
    return disks


def interval_witness(inst: LineInstance, iv: IntervalDisk) -> Disk:
    """Concrete disk of squared radius exactly r2 covering exactly the run.

    The center sits above the run midpoint at a rational height whose
    square lands in the exact feasibility window (cover the extremes,
    exclude the nearest outside point).
    """
    xs, r2 = inst.xs, inst.r2
    if iv.hi >= inst.n:
        raise FixedLineError("interval out of range")
    mid = (xs[iv.lo] + xs[iv.hi]) / 2
    half_span2 = (xs[iv.hi] - mid) ** 2
    if half_span2 > r2:
        raise FixedLineError("run wider than the disk diameter")
    outside = [(xs[k] - mid) ** 2 for k in range(inst.n) if not iv.covers(k)]
    if not outside or r2 - min(outside) < 0:
        return Disk(Point(mid, Fraction(0)), r2)
    lo_h2 = r2 - min(outside)  # squared height must exceed this
    hi_h2 = r2 - half_span2  # and may not exceed this
    if hi_h2 <= lo_h2:
        raise FixedLineError("run not realizable with this radius")
    h = _rat_sqrt_between(lo_h2, hi_h2)
    return Disk(Point(mid, h), r2)


def intervals_to_disks(inst: LineInstance, disks: list[IntervalDisk]) -> list[Disk]:
    return [interval_witness(inst, iv) for iv in disks]


def _signatures(inst: LineInstance, disks: list[IntervalDisk]) -> list[tuple[int, ...]]:
    return [tuple(t for t, d in enumerate(disks) if d.covers(k)) for k in range(inst.n)]


def components(inst: LineInstance, disks: list[IntervalDisk]) -> list[tuple[list[int], list[int]]]:
    """Connected components under shared-disk reachability.

    Returns (point indices, disk indices) per component, in point order.
    """
    parent = list(range(inst.n))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for d in disks:
        for k in range(d.lo, d.hi):
            parent[find(k)] = find(k + 1)
    groups: dict[int, list[int]] = {}
    for k in range(inst.n):
        groups.setdefault(find(k), []).append(k)
    out = []
    for root in sorted(groups, key=lambda r: groups[r][0]):
        pts = groups[root]
        dsk = [t for t, d in enumerate(disks) if find(d.lo) == root]
        out.append((pts, dsk))
    return out


def is_normal_form(inst: LineInstance, disks: list[IntervalDisk]) -> bool:
    """Whether the family is the canonical perfect pattern on its run.

    On a single point: one singleton disk.  On an odd run of 2p+1
    points (relative indices 0..2p): a starting pair (0,1), interior
    triples (2i−1, 2i+1), and a closing pair (2p−1, 2p).
    """
    if not disks:
        return False
    lo = min(d.lo for d in disks)
    hi = max(d.hi for d in disks)
    m = hi - lo + 1
    ordered = sorted(disks, key=lambda d: (d.lo, d.hi))
    if m == 1:
        return ordered == [IntervalDisk(lo, lo)]
    if m % 2 == 0:
        return False
    p = (m - 1) // 2
    expect = [IntervalDisk(lo, lo + 1)]
    expect += [IntervalDisk(lo + 2 * i - 1, lo + 2 * i + 1) for i in range(1, p)]
    expect.append(IntervalDisk(lo + 2 * p - 1, lo + 2 * p))
    return ordered == expect


def is_piecewise_perfect(inst: LineInstance, disks: list[IntervalDisk]) -> bool:
    """Whether every shared-disk component is identified perfectly.

    Perfect means the component of m points uses exactly (m+1)/2 disks
    (m odd).  Raises if the family does not identify the instance.
    """
    sigs = _signatures(inst, disks)
    if any(not s for s in sigs) or len(set(sigs)) != inst.n:
        raise FixedLineError("family does not identify the instance")
    for pts, dsk in components(inst, disks):
        m = len(pts)
        if m % 2 == 0 or len(dsk) != (m + 1) // 2:
            return False
    return True
