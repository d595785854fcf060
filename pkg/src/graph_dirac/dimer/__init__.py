"""Domino tilings of k x n lattices, plain and glued."""

from .gluing import (
    bridge_edge_indices,
    glued_lattice,
    glued_tiling_brute,
    glued_tiling_count,
    gluing_identity_check,
    parse_gluing_spec,
)
from .lattice import (
    EdgeKind,
    LatticeGraph,
    bareiss_determinant,
    kasteleyn_determinant,
    kasteleyn_matrix,
    kasteleyn_tiling_count,
    lattice,
)
from .matching import MatchingCount, count_matchings_brute
from .recurrences import (
    SUPPORTED_HEIGHTS,
    alternating_sum,
    corner_count,
    partial_sums,
    sequence_value,
    tiling_closed,
    tiling_count,
)

__all__ = [
    "EdgeKind",
    "LatticeGraph",
    "MatchingCount",
    "SUPPORTED_HEIGHTS",
    "alternating_sum",
    "bareiss_determinant",
    "bridge_edge_indices",
    "corner_count",
    "count_matchings_brute",
    "glued_lattice",
    "glued_tiling_brute",
    "glued_tiling_count",
    "gluing_identity_check",
    "kasteleyn_determinant",
    "kasteleyn_matrix",
    "kasteleyn_tiling_count",
    "lattice",
    "parse_gluing_spec",
    "partial_sums",
    "sequence_value",
    "tiling_closed",
    "tiling_count",
]
