"""Command-line interface.

Subcommands: verify, solve, construct, gen, render, bounds.
Exit codes: 0 success/valid, 1 invalid certificate, 2 usage or parse
error, 3 infeasible or cap exceeded.  Output is deterministic for
identical inputs.  The solver cap can be overridden with the
DISKIDENT_CAP environment variable or --cap.
"""

import argparse
import sys
from fractions import Fraction
from pathlib import Path

from . import construct, fileio, instances, oracle, solver, svg
from .geometry import (
    GeometryError,
    CollinearPointsError,
    DegenerateConfigurationError,
    all_collinear,
    is_general_configuration,
)

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_USAGE = 2
EXIT_INFEASIBLE = 3


class _CliError(Exception):
    def __init__(self, message, code=EXIT_USAGE):
        super().__init__(message)
        self.code = code


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as e:
        raise _CliError(f"cannot read {path}: {e.strerror}") from None


def _load_points(path: str):
    pts, meta = fileio.parse_points(_read(path))
    return pts, meta


def _load_disks(path: str):
    return fileio.parse_disks(_read(path))


def _parse_radius(value: str):
    """--radius free|R with R the disk radius; returns r2 or None."""
    if value == "free":
        return None
    try:
        r = Fraction(value)
    except (ValueError, ZeroDivisionError):
        raise _CliError(f"bad radius {value!r}: use 'free' or a rational") from None
    if r <= 0:
        raise _CliError("radius must be positive")
    return r * r


def _int_args(spec: str, want: int, what: str) -> list[int]:
    parts = spec.split(",")
    if len(parts) != want:
        raise _CliError(f"{what}: expected {want} comma-separated integers")
    try:
        return [int(p) for p in parts]
    except ValueError:
        raise _CliError(f"{what}: expected integers, got {spec!r}") from None


# ---------------------------------------------------------------------------
# subcommands


def _cmd_verify(args) -> int:
    pts, _ = _load_points(args.points)
    disks = _load_disks(args.disks)
    cert = solver.verify(pts, disks, mode=args.mode)
    if cert.is_valid:
        print(f"VALID, {len(disks)} disks, {len(pts)} points")
        return EXIT_OK
    if cert.status == "uncovered":
        print(f"UNCOVERED point {cert.indices[0]}")
    else:
        print(f"UNSEPARATED points {cert.indices[0]} {cert.indices[1]}")
    return EXIT_INVALID


def _cmd_solve(args) -> int:
    pts, _ = _load_points(args.points)
    r2 = _parse_radius(args.radius)
    try:
        res = solver.solve_exact(pts, mode=args.mode, r2=r2, cap=args.cap)
    except solver.CapExceededError as e:
        raise _CliError(str(e), EXIT_INFEASIBLE) from None
    except solver.InfeasibleError as e:
        raise _CliError(f"infeasible: {e}", EXIT_INFEASIBLE) from None
    print(f"optimal {res.size}")
    if args.out:
        Path(args.out).write_text(fileio.disks_document(res.disks))
    return EXIT_OK


_GRID_FAMILIES = {
    "grid2": (1, lambda p: construct.identify_grid_2xn(p[0])),
    "gridhp": (2, lambda p: construct.identify_grid_halfplanes(p[0], p[1])),
    "gridlong": (2, lambda p: construct.identify_grid_long(p[0], p[1])),
}


def _cmd_construct(args) -> int:
    if (args.family is None) == (args.points is None):
        raise _CliError("give exactly one of a points file or --family")
    if args.family is not None:
        name, _, params = args.family.partition(":")
        if name not in _GRID_FAMILIES:
            raise _CliError(f"unknown family {name!r}; use grid2, gridhp or gridlong")
        want, build = _GRID_FAMILIES[name]
        vals = _int_args(params, want, f"--family {name}")
        disks = build(vals)
        pts = construct.grid_points(2 if name == "grid2" else vals[0],
                                    vals[0] if name == "grid2" else vals[1])
    else:
        pts, _ = _load_points(args.points)
        algo = args.algorithm
        if algo == "auto":
            if all_collinear(pts):
                algo = "collinear"
            elif is_general_configuration(pts):
                algo = "genpos"
            else:
                algo = "greedy"
        if algo == "collinear":
            disks = construct.identify_collinear(pts)
        elif algo == "genpos":
            disks = construct.identify_general_position(pts)
        else:
            disks = construct.identify_greedy_half(pts)
    cert = solver.verify(pts, disks)
    if not cert.is_valid:
        print(f"internal error: construction failed verification ({cert.status})",
              file=sys.stderr)
        return EXIT_INVALID
    if args.out:
        Path(args.out).write_text(fileio.disks_document(disks))
    print(f"{len(disks)} disks")
    return EXIT_OK


def _cmd_gen(args) -> int:
    name, _, params = args.family.partition(":")
    disks = None
    try:
        if name == "polygon":
            (k,) = _int_args(params, 1, "polygon")
            disks, pts = instances.gen_polygon_arrangement(k)
            inst = instances.Instance(
                "PolygonArrangement", {"k": k}, pts, {"exact": k}
            )
        elif name == "intermediate":
            n, k = _int_args(params, 2, "intermediate")
            inst = instances.gen_intermediate(n, k)
        elif name == "parabola":
            (n,) = _int_args(params, 1, "parabola")
            inst = instances.gen_half_parabola(n)
        elif name == "grid":
            m, n = _int_args(params, 2, "grid")
            inst = instances.gen_grid(m, n)
        elif name == "random":
            n, seed = _int_args(params, 2, "random")
            inst = instances.gen_random_general(n, seed)
        else:
            raise _CliError(f"unknown family {name!r}")
    except instances.InstanceError as e:
        raise _CliError(str(e)) from None
    meta = {"family": inst.family, "params": inst.params, "known": inst.known}
    Path(args.out).write_text(fileio.points_document(inst.points, meta))
    if disks is not None and args.disks_out:
        Path(args.disks_out).write_text(fileio.disks_document(disks))
    print(f"{inst.n} points")
    return EXIT_OK


def _cmd_render(args) -> int:
    pts, _ = _load_points(args.points)
    disks = _load_disks(args.disks) if args.disks else []
    Path(args.out).write_text(svg.render_svg(pts, disks))
    print(f"wrote {args.out}")
    return EXIT_OK


def _cmd_bounds(args) -> int:
    if args.grid:
        m, n = _int_args(args.grid, 2, "--grid")
        rows = [("grid-halfplanes", instances.bound_grid_hp(m, n))]
        if m == 2:
            rows.append(("grid-2xn", instances.bound_grid2(n)))
    else:
        if args.n is None:
            raise _CliError("give n or --grid m,n")
        n = args.n
        try:
            rows = [
                ("log-lower", instances.bound_log(n)),
                ("sqrt-lower", instances.bound_sqrt(n)),
                ("upper", instances.bound_upper(n)),
                ("general-position-upper", instances.bound_genpos(n)),
                ("collinear-exact", instances.bound_collinear(n)),
            ]
        except instances.InstanceError as e:
            raise _CliError(str(e)) from None
    for name, value in rows:
        print(f"{name} {value}")
    return EXIT_OK


# ---------------------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="diskident",
        description="identify points in the plane with disks and half-planes",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="check a family of disks against points")
    p.add_argument("points")
    p.add_argument("disks")
    p.add_argument("--mode", choices=solver.MODES, default="identify")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("solve", help="optimal identifying family")
    p.add_argument("points")
    p.add_argument("--radius", default="free", help="'free' or a rational radius")
    p.add_argument("--mode", choices=solver.MODES, default="identify")
    p.add_argument("--cap", type=int, default=None)
    p.add_argument("--out", help="write witness disks to this file")
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("construct", help="build an identifying family")
    p.add_argument("points", nargs="?")
    p.add_argument("--family", help="grid2:n, gridhp:m,n or gridlong:m,n")
    p.add_argument(
        "--algorithm", choices=("collinear", "greedy", "genpos", "auto"), default="auto"
    )
    p.add_argument("--out", help="write disks to this file")
    p.set_defaults(func=_cmd_construct)

    p = sub.add_parser("gen", help="generate a named instance")
    p.add_argument(
        "--family",
        required=True,
        help="polygon:k, intermediate:n,k, parabola:n, grid:m,n or random:n,seed",
    )
    p.add_argument("--out", required=True)
    p.add_argument("--disks-out", help="also write the family's disks (polygon)")
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("render", help="render points and disks as SVG")
    p.add_argument("points")
    p.add_argument("disks", nargs="?")
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_render)

    p = sub.add_parser("bounds", help="closed-form bounds for n points")
    p.add_argument("n", nargs="?", type=int)
    p.add_argument("--grid", help="m,n grid dimensions")
    p.set_defaults(func=_cmd_bounds)

    return ap


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except _CliError as e:
        print(f"error: {e}", file=sys.stderr)
        return e.code
    except fileio.ParseError as e:
        print(f"parse error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except (DegenerateConfigurationError, CollinearPointsError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except (construct.ConstructError, instances.InstanceError, GeometryError,
            oracle.OracleError, solver.SolverError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
