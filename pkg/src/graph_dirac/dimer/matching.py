"""Exact perfect-matching counts by backtracking."""

import logging
from collections.abc import Iterable
from functools import cache

from ..exceptions import InvalidGraphError
from ..graphs.oriented import OrientedGraph

logger = logging.getLogger(__name__)


class MatchingCount(int):
    """Exact, non-negative number of perfect matchings."""

    def __new__(cls, value: int) -> "MatchingCount":
        if value < 0:
            raise ValueError(f"matching count cannot be negative, got {value}")
        return super().__new__(cls, value)

    @property
    def value(self) -> int:
        return int(self)


def count_matchings_brute(
    g: OrientedGraph,
    forced_edges: Iterable[int] = (),
    forbidden_vertices: Iterable[int] = (),
) -> MatchingCount:
    """Perfect matchings of g minus ``forbidden_vertices`` that use every forced edge.

    The search always extends the matching at the lowest-numbered uncovered
    vertex. Partial results are memoized on the set of covered vertices.

    Args:
        g: Graph to match
        forced_edges: Edge indices that must be in the matching
        forbidden_vertices: Vertices removed before matching

    Returns:
        The count, zero when the constraints cannot be met

    Raises:
        InvalidGraphError: If a forbidden vertex or a forced edge is not in g
    """
    covered = 0
    for v in forbidden_vertices:
        if not 0 <= v < g.vertex_count:
            raise InvalidGraphError(
                f"forbidden vertex {v} is not in a graph on {g.vertex_count} vertices"
            )
        covered |= 1 << v
    for j in forced_edges:
        if not 0 <= j < g.edge_count:
            raise InvalidGraphError(
                f"forced edge {j} is not in a graph with {g.edge_count} edges", edge_position=j
            )
        tail, head = g.edges[j]
        endpoints = (1 << tail) | (1 << head)
        if covered & endpoints:
            logger.debug(f"Forced edge {j} overlaps a covered vertex; no matching exists")
            return MatchingCount(0)
        covered |= endpoints

    full = (1 << g.vertex_count) - 1
    neighbors = tuple(tuple(sorted(g.neighbors[v])) for v in range(g.vertex_count))

    @cache
    def extend(mask: int) -> int:
        if mask == full:
            return 1
        lowest = (~mask & (mask + 1)).bit_length() - 1
        total = 0
        for u in neighbors[lowest]:
            if not mask >> u & 1:
                total += extend(mask | (1 << lowest) | (1 << u))
        return total

    count = extend(covered)
    logger.debug(f"Matching search visited {extend.cache_info().currsize} states")
    return MatchingCount(count)
