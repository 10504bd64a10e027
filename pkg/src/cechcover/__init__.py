"""Coverage complexes of planar disks with per-disk radii.

Builds the nerve of a disk collection (simplices are subsets of disks with
a common point), the clique complex of the same intersection graph for
comparison, and mod-2 homology on top: Betti numbers for components and
coverage holes, plus a per-vertex overlap index.  Ships a brute-force grid
oracle for cross-checking, a Poisson scenario generator, file formats, SVG
and matplotlib rendering, and a construction-time benchmark.
"""

from .bench import BenchRow, ScalingFit, benchmark, fit_scaling, rows_to_csv
from .complexes import (
    CECH,
    RIPS,
    DiskSet,
    LevelNotBuiltError,
    NotPairwiseAdjacentError,
    SimplicialComplex,
    build_cech,
    build_one_simplices,
    build_rips,
    enumerate_candidates,
    verify_candidate,
)
from .geometry import (
    DEFAULT_TOLERANCE,
    CoincidentCirclesError,
    Disk,
    Point,
    Tolerance,
    circle_intersection_points,
    disk_inside_disk,
    disks_intersect,
    point_in_disk,
)
from .homology import (
    BoundaryMatrix,
    HomologyReport,
    betti_numbers,
    boundary_matrix,
    gf2_rank,
    vertex_index,
)
from .io import (
    DiskFileError,
    disks_to_csv,
    read_complex,
    read_disks,
    write_complex,
    write_disks,
)
from .oracle import (
    INCONCLUSIVE,
    NO,
    YES,
    Disagreement,
    OracleVerdict,
    common_point_exists,
    cross_check,
)
from .pipeline import RunReport, run
from .render import render_svg, render_svg_text
from .rng import SplitMix64
from .scenario import ScenarioConfig, generate_scenario

__version__ = "0.1.0"

__all__ = [
    "BenchRow",
    "BoundaryMatrix",
    "CECH",
    "CoincidentCirclesError",
    "DEFAULT_TOLERANCE",
    "Disagreement",
    "Disk",
    "DiskFileError",
    "DiskSet",
    "HomologyReport",
    "INCONCLUSIVE",
    "LevelNotBuiltError",
    "NO",
    "NotPairwiseAdjacentError",
    "OracleVerdict",
    "Point",
    "RIPS",
    "RunReport",
    "ScalingFit",
    "ScenarioConfig",
    "SimplicialComplex",
    "SplitMix64",
    "Tolerance",
    "YES",
    "benchmark",
    "betti_numbers",
    "boundary_matrix",
    "build_cech",
    "build_one_simplices",
    "build_rips",
    "circle_intersection_points",
    "common_point_exists",
    "cross_check",
    "disk_inside_disk",
    "disks_intersect",
    "disks_to_csv",
    "enumerate_candidates",
    "fit_scaling",
    "generate_scenario",
    "gf2_rank",
    "point_in_disk",
    "read_complex",
    "read_disks",
    "render_svg",
    "render_svg_text",
    "rows_to_csv",
    "run",
    "verify_candidate",
    "vertex_index",
    "write_complex",
    "write_disks",
]
