"""Oriented simple graphs and their incidence matrices.

Vertices are ``0..vertex_count-1``. Edges are numbered by their position in
the input list, and each carries its orientation as a ``(tail, head)`` pair.
"""

import logging
from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field
from functools import cached_property
from pathlib import Path
from typing import Any

import networkx as nx
import numpy as np
from pydantic import ValidationError as PydanticValidationError

from schemas.graph import GraphDocument

from ..exceptions import GraphDocumentError, InvalidGraphError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class OrientedGraph:
    """Finite simple graph with a fixed orientation on every edge.

    Attributes:
        vertex_count: Number of vertices
        edges: Ordered (tail, head) pairs; position j is edge j
    """

    vertex_count: int
    edges: tuple[tuple[int, int], ...] = field(default=())

    def __post_init__(self) -> None:
        if self.vertex_count < 0:
            raise InvalidGraphError(f"vertex count must be non-negative, got {self.vertex_count}")

        normalized = tuple((int(tail), int(head)) for tail, head in self.edges)
        object.__setattr__(self, "edges", normalized)

        seen: dict[frozenset[int], int] = {}
        for position, (tail, head) in enumerate(normalized):
            for endpoint in (tail, head):
                if not 0 <= endpoint < self.vertex_count:
                    raise InvalidGraphError(
                        f"edge {position} ({tail}, {head}): vertex {endpoint} "
                        f"outside 0..{self.vertex_count - 1}",
                        edge_position=position,
                    )
            if tail == head:
                raise InvalidGraphError(
                    f"edge {position} ({tail}, {head}) is a self-loop",
                    edge_position=position,
                )
            pair = frozenset((tail, head))
            if pair in seen:
                raise InvalidGraphError(
                    f"edge {position} ({tail}, {head}) duplicates edge {seen[pair]}",
                    edge_position=position,
                )
            seen[pair] = position

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def tail(self, edge: int) -> int:
        return self.edges[edge][0]

    def head(self, edge: int) -> int:
        return self.edges[edge][1]

    @cached_property
    def incident_edges(self) -> tuple[tuple[int, ...], ...]:
        """Edge indices meeting each vertex, ascending."""
        incident: list[list[int]] = [[] for _ in range(self.vertex_count)]
        for j, (tail, head) in enumerate(self.edges):
            incident[tail].append(j)
            incident[head].append(j)
        return tuple(tuple(edges) for edges in incident)

    @cached_property
    def neighbors(self) -> tuple[frozenset[int], ...]:
        adjacent: list[set[int]] = [set() for _ in range(self.vertex_count)]
        for tail, head in self.edges:
            adjacent[tail].add(head)
            adjacent[head].add(tail)
        return tuple(frozenset(vertices) for vertices in adjacent)

    @cached_property
    def neighbor_masks(self) -> tuple[int, ...]:
        """Neighbors of each vertex as a bit set."""
        return tuple(sum(1 << u for u in vertices) for vertices in self.neighbors)

    def degree(self, vertex: int) -> int:
        return len(self.incident_edges[vertex])

    def is_adjacent(self, u: int, v: int) -> bool:
        return v in self.neighbors[u]

    def to_networkx(self) -> nx.Graph:
        """Undirected networkx view; edge attribute ``index`` holds the edge number.

        Edges are inserted in (min, max) order so adjacency iteration, and
        therefore any traversal built on it, visits neighbors ascending.
        """
        graph = nx.Graph()
        graph.add_nodes_from(range(self.vertex_count))
        ordered = sorted(
            (min(tail, head), max(tail, head), j) for j, (tail, head) in enumerate(self.edges)
        )
        for u, v, j in ordered:
            graph.add_edge(u, v, index=j)
        return graph

    def to_document(self) -> GraphDocument:
        return GraphDocument(vertices=self.vertex_count, edges=list(self.edges))


def parse_graph(document: str | bytes | Mapping[str, Any]) -> OrientedGraph:
    """Parse a graph JSON document (or its decoded mapping).

    Args:
        document: JSON text such as ``{"vertices": 3, "edges": [[0, 1], [1, 2]]}``

    Returns:
        The validated OrientedGraph, edge order preserved

    Raises:
        GraphDocumentError: If the JSON is malformed or does not match the schema
        InvalidGraphError: If an edge is a self-loop, a duplicate, or out of range
    """
    try:
        if isinstance(document, (str, bytes)):
            parsed = GraphDocument.model_validate_json(document)
        else:
            parsed = GraphDocument.model_validate(document)
    except PydanticValidationError as e:
        raise GraphDocumentError(
            "Graph document failed validation",
            errors=[str(err) for err in e.errors()],
        ) from e

    graph = OrientedGraph(parsed.vertices, tuple(parsed.edges))
    logger.debug(f"Parsed graph with {graph.vertex_count} vertices, {graph.edge_count} edges")
    return graph


def load_graph(path: Path) -> OrientedGraph:
    """Read and parse a graph document from a UTF-8 file."""
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise GraphDocumentError(f"Cannot read graph file {path}: {e}") from e
    return parse_graph(text)


def incidence_matrix(g: OrientedGraph) -> np.ndarray:
    """|V| x |E| integer matrix: +1 where edge j ends, -1 where it starts."""
    matrix = np.zeros((g.vertex_count, g.edge_count), dtype=np.int64)
    for j, (tail, head) in enumerate(g.edges):
        matrix[tail, j] = -1
        matrix[head, j] = 1
    return matrix


def reorient(g: OrientedGraph, flipped: Iterable[int]) -> OrientedGraph:
    """Same graph with the listed edges reversed."""
    flip = set(flipped)
    edges = tuple(
        (head, tail) if j in flip else (tail, head) for j, (tail, head) in enumerate(g.edges)
    )
    return OrientedGraph(g.vertex_count, edges)


def empty_graph(n: int) -> OrientedGraph:
    return OrientedGraph(n, ())


def path_graph(n: int) -> OrientedGraph:
    """P_n with edges i -> i+1."""
    return OrientedGraph(n, tuple((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int, reversed_edges: Iterable[int] = ()) -> OrientedGraph:
    """C_n with edges i -> i+1 (mod n), the listed edges flipped."""
    if n < 3:
        raise InvalidGraphError(f"a simple cycle needs at least 3 vertices, got {n}")
    cyclic = OrientedGraph(n, tuple((i, (i + 1) % n) for i in range(n)))
    return reorient(cyclic, reversed_edges)


def complete_graph(n: int) -> OrientedGraph:
    """K_n with edges i -> j for i < j."""
    return OrientedGraph(n, tuple((i, j) for i in range(n) for j in range(i + 1, n)))


def opposite_edge_triangle() -> OrientedGraph:
    """Cyclically oriented triangle whose edge j is the edge opposite vertex j."""
    return OrientedGraph(3, ((1, 2), (2, 0), (0, 1)))
