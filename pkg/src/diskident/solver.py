"""Exact verification and optimal solving of disk identification.

A disk family identifies a point set when every point lies in at least
one disk and no two points lie in exactly the same set of disks.
Finding a minimum identifying family is a test-cover problem over the
hypergraph of disk-realizable subsets; it is solved exactly by branch
and bound with element branching, dominance elimination, a greedy
incumbent, and combinatorial lower bounds.
"""
from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .geometry import GeneralizedDisk, Point, all_collinear, is_general_configuration
from . import oracle

DEFAULT_CAP = 16
MODES = ("identify", "separate")


class SolverError(Exception):
    """Solver failure (bad mode, empty input, internal inconsistency)."""


class CapExceededError(SolverError):
    """Instance larger than the configured solver cap."""


class InfeasibleError(SolverError):
    """No disk family can meet the requirements.

    ``blocking`` is ('pair', i, j) for an unseparable pair or
    ('point', i) for an uncoverable point.
    """

    def __init__(self, message: str, blocking: tuple):
        super().__init__(message)
        self.blocking = blocking


def solver_cap(cap: Optional[int] = None) -> int:
    """Effective point cap: explicit arg, else DISKIDENT_CAP, else default."""
    if cap is not None:
        return cap
    env = os.environ.get("DISKIDENT_CAP")
    return int(env) if env else DEFAULT_CAP


@dataclass
class Certificate:
    """Per-point signatures plus the verification outcome.

    status is 'valid', 'uncovered' (indices = (point,)) or 'unseparated'
    (indices = (point, point)); the first violation in index order is
    the one reported.
    """

    signatures: list[tuple[int, ...]]
    status: str
    indices: tuple[int, ...] = ()

    @property
    def is_valid(self) -> bool:
        return self.status == "valid"


@dataclass
class SolveResult:
    disks: list[GeneralizedDisk]
    size: int
    optimal: bool
    mode: str
    radius_mode: object  # 'free' or the fixed squared radius
    masks: list[int]  # chosen subsets, parallel to disks


def signatures(points: Sequence[Point], disks: Sequence[GeneralizedDisk]) -> list[tuple[int, ...]]:
    return [tuple(k for k, d in enumerate(disks) if d.contains(p)) for p in points]


def verify(points: Sequence[Point], disks: Sequence[GeneralizedDisk], mode: str = "identify") -> Certificate:
    """Exact certificate that disks identify (or merely separate) points."""
    if mode not in MODES:
        raise SolverError(f"unknown mode {mode!r}")
    sigs = signatures(points, disks)
    n = len(sigs)
    if mode == "identify":
        for i, s in enumerate(sigs):
            if not s:
                return Certificate(sigs, "uncovered", (i,))
    for i in range(n):
        for j in range(i + 1, n):
            if sigs[i] == sigs[j]:
                return Certificate(sigs, "unseparated", (i, j))
    return Certificate(sigs, "valid")


def _ceil_log2(m: int) -> int:
    return (m - 1).bit_length() if m >= 1 else 0


def geometric_lower_bound(n: int, mode: str = "identify") -> int:
    """Smallest k not excluded by signature counting and face counting.

    k disks produce at most 2^k − 1 nonempty signatures and split the
    plane into at most k² − k + 2 faces (one of which has the empty
    signature), so identification needs 2^k − 1 ≥ n and k² − k + 1 ≥ n;
    separation alone may leave one point uncovered, relaxing both by 1.
    """
    slack = 0 if mode == "identify" else 1
    k = 0
    while (1 << k) - 1 + slack < n:
        k += 1
    k2 = 0
    while k2 * k2 - k2 + 1 + slack < n:
        k2 += 1
    return max(k, k2)


def solve_exact(
    points: Sequence[Point],
    mode: str = "identify",
    r2=None,
    cap: Optional[int] = None,
) -> SolveResult:
    """Minimum identifying (or separating) disk family, exactly.

    r2=None solves with free radius; a positive rational r2 restricts
    to disks of squared radius exactly r2.
    """
    if mode not in MODES:
        raise SolverError(f"unknown mode {mode!r}")
    pts = list(points)
    n = len(pts)
    if n == 0:
        raise SolverError("empty point set")
    limit = solver_cap(cap)
    if n > limit:
        raise CapExceededError(f"{n} points exceeds solver cap {limit}")
    radius_mode = "free" if r2 is None else Fraction(r2)
    hg = oracle.realizable_subsets(pts) if r2 is None else oracle.realizable_subsets_fixed_r(pts, r2)

    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    offset = n if mode == "identify" else 0

    def reqbits(mask: int) -> int:
        r = mask if mode == "identify" else 0
        for q, (i, j) in enumerate(pairs):
            if (mask >> i & 1) != (mask >> j & 1):
                r |= 1 << (offset + q)
        return r

    edges = [(mask, reqbits(mask), wit) for mask, wit in hg.edges]
    allreq = (1 << (offset + len(pairs))) - 1
    achievable = 0
    for _, r, _ in edges:
        achievable |= r
    missing = allreq & ~achievable
    if missing:
        bit = (missing & -missing).bit_length() - 1
        if bit < offset:
            raise InfeasibleError(f"point {bit} cannot be covered", ("point", bit))
        i, j = pairs[bit - offset]
        raise InfeasibleError(f"points {i} and {j} cannot be separated", ("pair", i, j))

    # dominance elimination: drop edges whose requirement contribution is
    # contained in another's (first in canonical order wins ties)
    kept = []
    for t, (mask, r, wit) in enumerate(edges):
        dominated = False
        for t2, (mask2, r2b, _) in enumerate(edges):
            if t2 == t:
                continue
            if r | r2b == r2b and (r != r2b or t2 < t):
                dominated = True
                break
        if not dominated:
            kept.append((mask, r, wit))
    edges = kept
    ne = len(edges)

    if allreq == 0:
        return SolveResult([], 0, True, mode, radius_mode, [])

    # greedy incumbent
    rem = allreq
    greedy: list[int] = []
    while rem:
        best_t, best_gain = -1, -1
        for t in range(ne):
            gain = (edges[t][1] & rem).bit_count()
            if gain > best_gain:
                best_t, best_gain = t, gain
        greedy.append(best_t)
        rem &= ~edges[best_t][1]

    glb = geometric_lower_bound(n, mode)
    best_sel = list(greedy)
    best_size = len(best_sel)

    if best_size > glb:
        covers: dict[int, list[int]] = {}
        bit = 1
        b = 0
        while bit <= allreq:
            covers[b] = [t for t in range(ne) if edges[t][1] >> b & 1]
            b += 1
            bit <<= 1
        gmax = max(r.bit_count() for _, r, _ in edges)

        def class_bound(keys: list[int]) -> int:
            groups: dict[int, int] = {}
            for k in keys:
                groups[k] = groups.get(k, 0) + 1
            lb = 0
            for k, s in groups.items():
                if mode == "identify" and k == 0:
                    need = _ceil_log2(s + 1)
                elif s >= 2:
                    need = _ceil_log2(s)
                else:
                    need = 0
                lb = max(lb, need)
            return lb

        def search(chosen: list[int], banned: int, covered: int, keys: list[int]) -> None:
            nonlocal best_sel, best_size
            if best_size <= glb:
                return
            if covered == allreq:
                if len(chosen) < best_size:
                    best_sel = list(chosen)
                    best_size = len(chosen)
                return
            rem = allreq & ~covered
            lb = max(-(-rem.bit_count() // gmax), class_bound(keys))
            if len(chosen) + lb >= best_size:
                return
            # branch on the unmet requirement with fewest covering edges
            pick, pick_cands = -1, None
            r = rem
            while r:
                b = (r & -r).bit_length() - 1
                r &= r - 1
                cands = [t for t in covers[b] if not banned >> t & 1]
                if pick_cands is None or len(cands) < len(pick_cands):
                    pick, pick_cands = b, cands
                    if len(cands) <= 1:
                        break
            if not pick_cands:
                return
            pick_cands.sort(key=lambda t: (-(edges[t][1] & rem).bit_count(), t))
            new_banned = banned
            for t in pick_cands:
                mask = edges[t][0]
                nkeys = [(k << 1) | (mask >> i & 1) for i, k in enumerate(keys)]
                chosen.append(t)
                search(chosen, new_banned, covered | edges[t][1], nkeys)
                chosen.pop()
                new_banned |= 1 << t
                if best_size <= glb:
                    return

        search([], 0, 0, [0] * n)

    sel = sorted(best_sel, key=lambda t: edges[t][0])
    result = SolveResult(
        disks=[edges[t][2] for t in sel],
        size=best_size,
        optimal=True,
        mode=mode,
        radius_mode=radius_mode,
        masks=[edges[t][0] for t in sel],
    )
    cert = verify(pts, result.disks, mode)
    if not cert.is_valid:
        raise SolverError("internal: solver output failed verification")
    return result


def sandwich_check(points: Sequence[Point], r2=None) -> dict:
    """Exact optimum sandwiched between closed-form lower bounds and the
    sizes of every applicable construction; raises on any violation."""
    from . import construct, instances

    pts = list(points)
    n = len(pts)
    res = solve_exact(pts, "identify", r2)
    lower = max(instances.bound_log(n), instances.bound_sqrt(n))
    uppers: dict[str, int] = {}
    if r2 is None:
        if all_collinear(pts):
            uppers["collinear"] = len(construct.identify_collinear(pts))
        uppers["greedy_half"] = len(construct.identify_greedy_half(pts))
        if n >= 1 and is_general_configuration(pts):
            uppers["general_position"] = len(construct.identify_general_position(pts))
    report = {"n": n, "lower": lower, "optimum": res.size, "uppers": uppers}
    if lower > res.size:
        raise SolverError(f"lower bound {lower} exceeds optimum {res.size}")
    for name, size in uppers.items():
        if size < res.size:
            raise SolverError(f"construction {name} beat the optimum: {size} < {res.size}")
    return report
