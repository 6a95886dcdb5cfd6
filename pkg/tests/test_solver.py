import os
from fractions import Fraction as F

import pytest

from conftest import rand_points, rand_collinear
from diskident.geometry import Point, Disk, HalfPlane
from diskident import solver
from diskident.solver import (
    verify,
    signatures,
    solve_exact,
    geometric_lower_bound,
    solver_cap,
    CapExceededError,
    SolverError,
)


def P(x, y):
    return Point(F(x), F(y))


def test_verify_valid_family():
    pts = [P(0, 0), P(2, 0), P(4, 0)]
    fam = [Disk(P(1, 0), F(3, 2)), Disk(P(3, 0), F(3, 2))]
    cert = verify(pts, fam)
    assert cert.is_valid and cert.status == "valid"
    assert signatures(pts, fam) == [(0,), (0, 1), (1,)]


def test_verify_uncovered_reports_lowest_index():
    pts = [P(0, 0), P(10, 0), P(20, 0)]
    fam = [Disk(P(10, 0), F(1))]
    cert = verify(pts, fam)
    assert cert.status == "uncovered" and cert.indices == (0,)


def test_verify_unseparated_reports_lowest_pair():
    pts = [P(0, 0), P(1, 0), P(2, 0)]
    fam = [Disk(P(1, 0), F(9))]
    cert = verify(pts, fam)
    assert cert.status == "unseparated" and cert.indices == (0, 1)


def test_separate_mode_allows_one_empty_signature():
    pts = [P(0, 0), P(5, 0)]
    fam = [Disk(P(0, 0), F(1))]
    assert not verify(pts, fam, mode="identify").is_valid
    assert verify(pts, fam, mode="separate").is_valid


def test_solve_collinear_matches_formula():
    for n in range(1, 9):
        pts = [P(2 * i, i) for i in range(n)]
        res = solve_exact(pts)
        assert res.size == (n + 2) // 2, n
        assert res.optimal
        assert verify(pts, res.disks).is_valid


def test_solve_separate_mode_not_larger():
    pts = rand_points(7, 42)
    rid = solve_exact(pts, mode="identify")
    rsep = solve_exact(pts, mode="separate")
    assert rsep.size <= rid.size
    assert verify(pts, rsep.disks, mode="separate").is_valid


def test_solve_fixed_radius():
    pts = [P(i, 0) for i in range(5)]
    res = solve_exact(pts, r2=F(4))
    assert res.size == 3
    assert all(isinstance(d, Disk) and d.r2 == F(4) for d in res.disks)
    assert verify(pts, res.disks).is_valid


def test_solver_deterministic():
    pts = rand_points(9, 7)
    a = solve_exact(pts)
    b = solve_exact(pts)
    assert a.masks == b.masks and a.size == b.size


def test_cap_and_env(monkeypatch):
    pts = rand_points(6, 3)
    with pytest.raises(CapExceededError):
        solve_exact(pts, cap=5)
    monkeypatch.setenv("DISKIDENT_CAP", "5")
    assert solver_cap() == 5
    with pytest.raises(CapExceededError):
        solve_exact(pts)
    assert solver_cap(cap=8) == 8  # explicit argument wins
    monkeypatch.delenv("DISKIDENT_CAP")
    assert solver_cap() == 16


def test_geometric_lower_bound():
    assert geometric_lower_bound(1) == 1
    assert geometric_lower_bound(7) == 3
    assert geometric_lower_bound(8) == 4
    assert geometric_lower_bound(14) == 5
    assert geometric_lower_bound(21) == 5
    assert geometric_lower_bound(22) == 6


def test_solver_meets_lower_bounds():
    for seed in range(5):
        pts = rand_points(8, 300 + seed)
        res = solve_exact(pts)
        assert res.size >= geometric_lower_bound(8)


def test_collinear_random_solves():
    for seed in range(4):
        n = 5 + seed
        pts = rand_collinear(n, seed)
        res = solve_exact(pts)
        assert res.size == (n + 2) // 2


def test_unknown_mode_rejected():
    with pytest.raises(SolverError):
        solve_exact([P(0, 0)], mode="cover")
