"""Exact identification of planar points with disks and half-planes.

A family of generalized disks identifies a finite point set when every
point is covered and no two points lie in exactly the same members.
This package verifies such families exactly (rational arithmetic
throughout), computes optimal families for small instances, and builds
guaranteed-size families for structured point sets.
"""

from .geometry import (
    Point,
    Disk,
    HalfPlane,
    GeneralizedDisk,
    GeometryError,
    CollinearPointsError,
    DegenerateConfigurationError,
    orientation,
    in_circumcircle,
    circumcenter,
    circumdisk,
    convex_hull,
    delaunay,
    Triangulation,
    all_collinear,
    is_general_configuration,
)
from .oracle import (
    OracleError,
    Hypergraph,
    realizable_subsets,
    realizable_subsets_fixed_r,
    realize_subset,
)
from .solver import (
    SolverError,
    CapExceededError,
    InfeasibleError,
    Certificate,
    SolveResult,
    verify,
    signatures,
    solve_exact,
    geometric_lower_bound,
    sandwich_check,
)
from .construct import (
    ConstructError,
    SixPartition,
    identify_collinear,
    identify_greedy_half,
    six_partition,
    trichromatic_triangle,
    identify_general_position,
    identify_grid_2xn,
    identify_grid_halfplanes,
    identify_grid_long,
    grid_points,
)
from .fixedline import (
    FixedLineError,
    LineInstance,
    IntervalDisk,
    identify_fixed_r_linear,
    interval_witness,
    intervals_to_disks,
    is_normal_form,
    is_piecewise_perfect,
)
from .instances import (
    InstanceError,
    Instance,
    bound_log,
    bound_sqrt,
    bound_upper,
    bound_genpos,
    bound_collinear,
    bound_grid2,
    bound_grid_hp,
    gen_grid,
    gen_random_general,
    gen_polygon_arrangement,
    gen_intermediate,
    gen_half_parabola,
)

__version__ = "1.0.0"
