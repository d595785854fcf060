"""Combining two oriented graphs: disjoint union, bridge and interface gluing."""

import logging
from collections.abc import Mapping, Sequence

from ..exceptions import GluingError
from .oriented import OrientedGraph

logger = logging.getLogger(__name__)


def _shift_edges(g: OrientedGraph, offset: int) -> tuple[tuple[int, int], ...]:
    return tuple((tail + offset, head + offset) for tail, head in g.edges)


def disjoint_union(g1: OrientedGraph, g2: OrientedGraph) -> OrientedGraph:
    """g1 followed by g2, whose vertices are shifted by g1.vertex_count."""
    return OrientedGraph(
        g1.vertex_count + g2.vertex_count,
        g1.edges + _shift_edges(g2, g1.vertex_count),
    )


def bridge_glue(
    g1: OrientedGraph, g2: OrientedGraph, pairs: Sequence[tuple[int, int]]
) -> OrientedGraph:
    """Disjoint union plus one bridge edge per (g1 vertex, g2 vertex) pair.

    Bridges are appended after the edges of both graphs, in pair order, and
    are oriented from g1 into g2.

    Raises:
        GluingError: If a pair names a missing vertex or repeats an earlier pair
    """
    seen: set[tuple[int, int]] = set()
    bridges: list[tuple[int, int]] = []
    for u, w in pairs:
        if not 0 <= u < g1.vertex_count:
            raise GluingError(f"bridge ({u}, {w}): vertex {u} not in the first graph")
        if not 0 <= w < g2.vertex_count:
            raise GluingError(f"bridge ({u}, {w}): vertex {w} not in the second graph")
        if (u, w) in seen:
            raise GluingError(f"bridge ({u}, {w}) listed twice")
        seen.add((u, w))
        bridges.append((u, g1.vertex_count + w))

    union = disjoint_union(g1, g2)
    return OrientedGraph(union.vertex_count, union.edges + tuple(bridges))


def interface_glue(
    g1: OrientedGraph, g2: OrientedGraph, iso: Mapping[int, int]
) -> OrientedGraph:
    """Identify the vertices ``u`` of g1 with ``iso[u]`` of g2.

    g1 keeps its numbering. Vertices of g2 outside the interface follow in
    ascending order. An edge of g2 whose endpoints both land on an existing
    edge is dropped, so the shared interface edges keep g1's orientation.

    Raises:
        GluingError: If the interface is empty, not injective, out of range, or
            does not preserve adjacency
    """
    if not iso:
        raise GluingError("interface gluing needs a non-empty interface; use disjoint_union")

    for u, w in iso.items():
        if not 0 <= u < g1.vertex_count or not 0 <= w < g2.vertex_count:
            raise GluingError(f"interface pair ({u}, {w}) out of range")
    if len(set(iso.values())) != len(iso):
        raise GluingError("interface map is not injective")

    domain = sorted(iso)
    for i, u in enumerate(domain):
        for v in domain[i + 1 :]:
            if g1.is_adjacent(u, v) != g2.is_adjacent(iso[u], iso[v]):
                raise GluingError(
                    f"interface does not preserve adjacency at ({u}, {v}) -> "
                    f"({iso[u]}, {iso[v]})"
                )

    relabel = {w: u for u, w in iso.items()}
    next_id = g1.vertex_count
    for w in range(g2.vertex_count):
        if w not in relabel:
            relabel[w] = next_id
            next_id += 1

    edges = list(g1.edges)
    present = {frozenset(edge) for edge in g1.edges}
    for tail, head in g2.edges:
        mapped = (relabel[tail], relabel[head])
        if frozenset(mapped) in present:
            continue
        present.add(frozenset(mapped))
        edges.append(mapped)

    logger.debug(f"Interface gluing merged {len(iso)} vertices")
    return OrientedGraph(next_id, tuple(edges))
