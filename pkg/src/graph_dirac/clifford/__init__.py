"""Clifford graph algebras and their centers."""

from .algebra import (
    AlgebraElement,
    Monomial,
    as_mask,
    commutator,
    monomial_product,
    render_support,
)
from .center import (
    CENTER_VERTEX_LIMIT,
    ORACLE_VERTEX_LIMIT,
    TreeClause,
    center_basis,
    center_dimension,
    center_oracle,
    even_leaf_pairs,
    is_central_monomial,
    tree_central_support_check,
)
from .predictions import (
    CenterShape,
    DisjointShape,
    GluedPathsShape,
    PathShape,
    glued_path_graph,
    predicted_center_dim,
)

__all__ = [
    "AlgebraElement",
    "Monomial",
    "as_mask",
    "commutator",
    "monomial_product",
    "render_support",
    "CENTER_VERTEX_LIMIT",
    "ORACLE_VERTEX_LIMIT",
    "TreeClause",
    "center_basis",
    "center_dimension",
    "center_oracle",
    "even_leaf_pairs",
    "is_central_monomial",
    "tree_central_support_check",
    "CenterShape",
    "DisjointShape",
    "GluedPathsShape",
    "PathShape",
    "glued_path_graph",
    "predicted_center_dim",
]
