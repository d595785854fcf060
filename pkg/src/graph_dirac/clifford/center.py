"""Centers of Clifford graph algebras.

The center is spanned by central monomials, and e_a is central exactly when
every vertex has an even number of neighbours in a. Read over GF(2), the
central supports are the null space of the adjacency matrix.
"""

import logging
from graph_dirac._compat import StrEnum
from itertools import combinations

import networkx as nx

from ..exceptions import NotATreeError, SizeBoundError, SupportError
from ..graphs.oriented import OrientedGraph
from .algebra import Monomial, Support, as_mask, generators_of, monomial_product

logger = logging.getLogger(__name__)

CENTER_VERTEX_LIMIT = 30
ORACLE_VERTEX_LIMIT = 14


def is_central_monomial(g: OrientedGraph, support: Support) -> bool:
    mask = as_mask(support)
    return all((neighbors & mask).bit_count() % 2 == 0 for neighbors in g.neighbor_masks)


def _null_space_gf2(rows: tuple[int, ...], width: int) -> list[int]:
    """Basis of {x : row . x = 0 mod 2 for every row}, rows and x as bitmasks."""
    pivots: dict[int, int] = {}
    for row in rows:
        for column, pivot_row in pivots.items():
            if row >> column & 1:
                row ^= pivot_row
        if not row:
            continue
        column = (row & -row).bit_length() - 1
        for other in pivots:
            if pivots[other] >> column & 1:
                pivots[other] ^= row
        pivots[column] = row

    basis = []
    for free in range(width):
        if free in pivots:
            continue
        vector = 1 << free
        for column, pivot_row in pivots.items():
            if pivot_row >> free & 1:
                vector |= 1 << column
        basis.append(vector)
    return basis


def center_basis(g: OrientedGraph) -> list[int]:
    """Supports of all central monomials, ascending by bit pattern.

    The empty support (the identity) is always included.

    Raises:
        SizeBoundError: Above CENTER_VERTEX_LIMIT vertices
    """
    if g.vertex_count > CENTER_VERTEX_LIMIT:
        raise SizeBoundError(
            f"center enumeration is limited to {CENTER_VERTEX_LIMIT} vertices, "
            f"got {g.vertex_count}",
            limit=CENTER_VERTEX_LIMIT,
        )
    span = [0]
    for vector in _null_space_gf2(g.neighbor_masks, g.vertex_count):
        span += [element ^ vector for element in span]
    logger.debug(f"Center of a {g.vertex_count}-vertex algebra has dimension {len(span)}")
    return sorted(span)


def center_oracle(g: OrientedGraph) -> list[int]:
    """Central supports found by commuting every monomial with every generator.

    Raises:
        SizeBoundError: Above ORACLE_VERTEX_LIMIT vertices
    """
    if g.vertex_count > ORACLE_VERTEX_LIMIT:
        raise SizeBoundError(
            f"the commutation oracle is limited to {ORACLE_VERTEX_LIMIT} vertices, "
            f"got {g.vertex_count}",
            limit=ORACLE_VERTEX_LIMIT,
        )
    generators = [Monomial.of(i) for i in range(g.vertex_count)]
    central = []
    for mask in range(1 << g.vertex_count):
        monomial = Monomial(mask)
        if all(
            monomial_product(g, monomial, e) == monomial_product(g, e, monomial)
            for e in generators
        ):
            central.append(mask)
    return central


def center_dimension(g: OrientedGraph) -> int:
    return len(center_basis(g))


class TreeClause(StrEnum):
    LEAF = "leaf"
    DISTANCE_TWO = "distance-two"
    ADJACENT = "adjacent"
    PARITY = "parity"


def _tree(g: OrientedGraph) -> nx.Graph:
    graph = g.to_networkx()
    if g.vertex_count == 0 or not nx.is_tree(graph):
        raise NotATreeError("expected a tree (connected and acyclic)")
    return graph


def tree_central_support_check(g: OrientedGraph, support: Support) -> list[TreeClause]:
    """Clauses of the tree centrality conditions that ``support`` violates.

    A central support of a tree contains a leaf, gives each of its vertices a
    partner in the support at distance two, and has no two adjacent vertices.
    ``PARITY`` is reported only when all three hold but the support is still
    not central.

    Raises:
        NotATreeError: If g is not a tree
        SupportError: If the support is empty or names a vertex outside g
    """
    graph = _tree(g)
    if not isinstance(support, int):
        support = list(support)
        outside = [v for v in support if not 0 <= v < g.vertex_count]
        if outside:
            raise SupportError(
                f"support indices {outside} are outside a tree on {g.vertex_count} vertices"
            )
    mask = as_mask(support)
    members = generators_of(mask)
    if not members:
        raise SupportError("tree check needs a non-empty support")
    # a single vertex has no edges to constrain it
    if g.vertex_count == 1:
        return []

    violated = []
    if not any(g.degree(v) == 1 for v in members):
        violated.append(TreeClause.LEAF)

    for v in members:
        reach = nx.single_source_shortest_path_length(graph, v, cutoff=2)
        if not any(reach.get(u) == 2 for u in members):
            violated.append(TreeClause.DISTANCE_TWO)
            break

    if any(g.neighbor_masks[v] & mask for v in members):
        violated.append(TreeClause.ADJACENT)

    if not violated and not is_central_monomial(g, mask):
        violated.append(TreeClause.PARITY)
    return violated


def even_leaf_pairs(g: OrientedGraph, support: Support) -> list[tuple[int, int]]:
    """Pairs of leaves in ``support`` at even distance from each other.

    Raises:
        NotATreeError: If g is not a tree
    """
    graph = _tree(g)
    leaves = [v for v in generators_of(as_mask(support)) if g.degree(v) == 1]
    return [
        (u, v)
        for u, v in combinations(leaves, 2)
        if nx.shortest_path_length(graph, u, v) % 2 == 0
    ]
