"""Pytest fixtures for graph-dirac tests."""

import json

import numpy as np
import pytest

from graph_dirac.graphs import OrientedGraph, parse_graph


@pytest.fixture
def p2_document():
    """Single edge 0 -> 1."""
    return {"vertices": 2, "edges": [[0, 1]]}


@pytest.fixture
def p3_document():
    """P3 with both edges pointing into the middle vertex.

    Its incidence matrix is [[-1, 0], [1, 1], [0, -1]] and its odd Laplacian
    is [[2, 1], [1, 2]].
    """
    return {"vertices": 3, "edges": [[0, 1], [2, 1]]}


@pytest.fixture
def p5_document():
    return {"vertices": 5, "edges": [[0, 1], [1, 2], [2, 3], [3, 4]]}


@pytest.fixture
def c3_cyclic_document():
    """Triangle oriented 0 -> 1 -> 2 -> 0."""
    return {"vertices": 3, "edges": [[0, 1], [1, 2], [2, 0]]}


@pytest.fixture
def c3_reversed_document():
    """Triangle with its third edge reversed."""
    return {"vertices": 3, "edges": [[0, 1], [1, 2], [0, 2]]}


@pytest.fixture
def k3_document():
    """Cyclic triangle whose edge j is opposite vertex j."""
    return {"vertices": 3, "edges": [[1, 2], [2, 0], [0, 1]]}


@pytest.fixture
def two_triangles_document():
    """Two disjoint cyclic triangles: two components and two independent cycles."""
    return {
        "vertices": 6,
        "edges": [[0, 1], [1, 2], [2, 0], [3, 4], [4, 5], [5, 3]],
    }


@pytest.fixture
def p3(p3_document):
    return parse_graph(p3_document)


@pytest.fixture
def p5(p5_document):
    return parse_graph(p5_document)


@pytest.fixture
def c3_cyclic(c3_cyclic_document):
    return parse_graph(c3_cyclic_document)


@pytest.fixture
def c3_reversed(c3_reversed_document):
    return parse_graph(c3_reversed_document)


@pytest.fixture
def two_triangles(two_triangles_document):
    return parse_graph(two_triangles_document)


@pytest.fixture
def graph_file(tmp_path):
    """Write a graph document to a JSON file and return its path."""

    def _write(document, name="graph.json"):
        path = tmp_path / name
        path.write_text(json.dumps(document))
        return path

    return _write


def make_random_graph(n: int, p: float, seed: int) -> OrientedGraph:
    """G(n, p) with every edge given a random direction."""
    rng = np.random.default_rng(seed)
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                edges.append((u, v) if rng.random() < 0.5 else (v, u))
    return OrientedGraph(n, tuple(edges))


@pytest.fixture
def random_graph():
    """Factory for seeded random oriented graphs."""
    return make_random_graph
