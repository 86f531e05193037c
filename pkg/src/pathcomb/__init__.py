"""Combing bijection for path families, with the Aztec diamond tiling
correspondence, exact Delannoy determinants, enumeration oracles, and a
rendering CLI."""

from .combing import (
    CombTrace,
    InsufficientVerticalSteps,
    NotDisjoint,
    PreconditionViolation,
    ResidualVerticalSteps,
    clify_step,
    comb,
    comb_column,
    disj_step,
    in_pathfam_nk,
    uncomb,
    uncomb_column,
)
from .delannoy import delannoy, delannoy_matrix, det_exact, verify_reduction
from .enumeration import (
    CapExceeded,
    all_bit_triangles,
    column_counts,
    diagonal_step_count,
    enumerate_disjoint,
    enumerate_schroder,
    intercolumn_counts,
    joint_distribution,
    row_counts,
    verify_bijection,
)
from .families import (
    BitTriangle,
    ExplicitPath,
    InvalidFamily,
    MalformedPath,
    ParseError,
    PathFamily,
    Violation,
    entry_levels,
    explicit_paths,
    family_from_bits,
    family_from_paths,
    is_cliff_shaped,
    is_disjoint,
    validate_family,
)
from .rng import SplitMix64, random_triangle
from .tilings import (
    Convention,
    DominoTiling,
    EdgePathFamily,
    EdgeSets,
    NotATiling,
    Region,
    aztec_region,
    convention_paths,
    dual_family,
    enumerate_tilings,
    family_to_tiling,
    paths_to_tiling,
    region_edges,
    tiling_to_family,
    tiling_to_paths,
)

__version__ = "0.1.0"
