"""Oriented simple graphs, gluing operations, components and cycle space."""

from .gluing import bridge_glue, disjoint_union, interface_glue
from .oriented import (
    OrientedGraph,
    complete_graph,
    cycle_graph,
    empty_graph,
    incidence_matrix,
    load_graph,
    opposite_edge_triangle,
    parse_graph,
    path_graph,
    reorient,
)
from .topology import (
    ComponentPartition,
    CycleBasisElement,
    betti_numbers,
    connected_components,
    cycle_basis,
)

__all__ = [
    "OrientedGraph",
    "ComponentPartition",
    "CycleBasisElement",
    "parse_graph",
    "load_graph",
    "incidence_matrix",
    "reorient",
    "empty_graph",
    "path_graph",
    "cycle_graph",
    "complete_graph",
    "opposite_edge_triangle",
    "disjoint_union",
    "bridge_glue",
    "interface_glue",
    "connected_components",
    "betti_numbers",
    "cycle_basis",
]
