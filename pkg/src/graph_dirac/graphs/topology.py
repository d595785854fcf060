"""Connected components, Betti numbers and the cycle space of an oriented graph."""

from dataclasses import dataclass

import networkx as nx

from .oriented import OrientedGraph


@dataclass(frozen=True)
class ComponentPartition:
    """Assignment of each vertex to a connected component.

    Component ids are ordered by the smallest vertex each component contains.

    Attributes:
        component_of: Component id of each vertex
        count: Number of components (b0)
    """

    component_of: tuple[int, ...]
    count: int

    def members(self, component: int) -> tuple[int, ...]:
        return tuple(v for v, c in enumerate(self.component_of) if c == component)


@dataclass(frozen=True)
class CycleBasisElement:
    """Edge state with entries in {-1, 0, +1} supported on one cycle.

    Attributes:
        coefficients: One entry per edge; the sign records whether the
            traversal runs along (+1) or against (-1) the edge
    """

    coefficients: tuple[int, ...]

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(j for j, c in enumerate(self.coefficients) if c != 0)


def connected_components(g: OrientedGraph) -> ComponentPartition:
    components = sorted(
        (sorted(component) for component in nx.connected_components(g.to_networkx())),
        key=lambda vertices: vertices[0],
    )
    component_of = [0] * g.vertex_count
    for cid, vertices in enumerate(components):
        for v in vertices:
            component_of[v] = cid
    return ComponentPartition(tuple(component_of), len(components))


def betti_numbers(g: OrientedGraph) -> tuple[int, int]:
    """(b0, b1): component count and cycle-space dimension."""
    b0 = connected_components(g).count
    return b0, g.edge_count - g.vertex_count + b0


def cycle_basis(g: OrientedGraph) -> list[CycleBasisElement]:
    """Fundamental cycles of the depth-first spanning forest.

    The forest is grown from the smallest vertex of each component, visiting
    neighbors in ascending order. Each edge outside the forest closes one
    cycle. Its traversal direction is chosen so the lowest-numbered edge on
    the cycle has coefficient +1. Elements come out in the order of their
    closing edges.
    """
    graph = g.to_networkx()
    parent: dict[int, tuple[int, int] | None] = {}
    depth: dict[int, int] = {}
    tree_edges: set[int] = set()

    for root in range(g.vertex_count):
        if root in parent:
            continue
        parent[root] = None
        depth[root] = 0
        for u, v in nx.dfs_edges(graph, source=root):
            j = graph.edges[u, v]["index"]
            parent[v] = (u, j)
            depth[v] = depth[u] + 1
            tree_edges.add(j)

    basis: list[CycleBasisElement] = []
    for j, (tail, head) in enumerate(g.edges):
        if j in tree_edges:
            continue
        coefficients = [0] * g.edge_count
        coefficients[j] = 1
        for x, y, edge in _tree_path(head, tail, parent, depth):
            coefficients[edge] = 1 if g.edges[edge] == (x, y) else -1
        first = next(c for c in coefficients if c != 0)
        if first < 0:
            coefficients = [-c for c in coefficients]
        basis.append(CycleBasisElement(tuple(coefficients)))
    return basis


def _tree_path(
    start: int,
    end: int,
    parent: dict[int, tuple[int, int] | None],
    depth: dict[int, int],
) -> list[tuple[int, int, int]]:
    """Steps (from, to, edge) of the forest path from start to end."""
    up: list[tuple[int, int, int]] = []
    down: list[tuple[int, int, int]] = []
    a, b = start, end
    while a != b:
        if depth[a] >= depth[b]:
            step = parent[a]
            assert step is not None
            up.append((a, step[0], step[1]))
            a = step[0]
        else:
            step = parent[b]
            assert step is not None
            down.append((step[0], b, step[1]))
            b = step[0]
    return up + down[::-1]
