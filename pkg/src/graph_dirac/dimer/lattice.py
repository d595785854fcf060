"""Rectangular lattice graphs and their Kasteleyn matrices."""

import logging
import math
from dataclasses import dataclass
from graph_dirac._compat import StrEnum
from typing import Literal

import numpy as np

from ..exceptions import IdentityViolationError, UnsupportedCaseError
from ..graphs.oriented import OrientedGraph
from .matching import MatchingCount

logger = logging.getLogger(__name__)

FLOAT_DET_RTOL = 1e-6


class EdgeKind(StrEnum):
    HORIZONTAL = "horizontal"
    VERTICAL = "vertical"


@dataclass(frozen=True)
class LatticeGraph:
    """The k x n grid graph L(k, n).

    Vertex ``r * n + c`` sits in row r (counted from the top) and column c.
    Horizontal edges come first, row by row, oriented left to right; vertical
    edges follow, oriented top to bottom.

    Attributes:
        rows: Height k
        cols: Width n
        graph: Underlying oriented graph
        coords: (row, col) of each vertex
        edge_kind: Horizontal or vertical, per edge
    """

    rows: int
    cols: int
    graph: OrientedGraph
    coords: tuple[tuple[int, int], ...]
    edge_kind: tuple[EdgeKind, ...]

    def vertex_at(self, row: int, col: int) -> int:
        return row * self.cols + col


def lattice(k: int, n: int) -> LatticeGraph:
    """Build L(k, n).

    Raises:
        UnsupportedCaseError: If k is below 1 or n is negative
    """
    if k < 1 or n < 0:
        raise UnsupportedCaseError(f"lattice needs k >= 1 and n >= 0, got {k} x {n}")

    edges: list[tuple[int, int]] = []
    kinds: list[EdgeKind] = []
    for r in range(k):
        for c in range(n - 1):
            edges.append((r * n + c, r * n + c + 1))
            kinds.append(EdgeKind.HORIZONTAL)
    for r in range(k - 1):
        for c in range(n):
            edges.append((r * n + c, (r + 1) * n + c))
            kinds.append(EdgeKind.VERTICAL)

    return LatticeGraph(
        rows=k,
        cols=n,
        graph=OrientedGraph(k * n, tuple(edges)),
        coords=tuple((r, c) for r in range(k) for c in range(n)),
        edge_kind=tuple(kinds),
    )


def kasteleyn_matrix(l: LatticeGraph) -> np.ndarray:
    """Symmetric weighted adjacency: 1 across horizontal edges, i across vertical."""
    size = l.graph.vertex_count
    matrix = np.zeros((size, size), dtype=np.complex128)
    for (u, v), kind in zip(l.graph.edges, l.edge_kind):
        weight = 1.0 if kind is EdgeKind.HORIZONTAL else 1j
        matrix[u, v] = weight
        matrix[v, u] = weight
    return matrix


def bareiss_determinant(matrix: list[list[int]]) -> int:
    """Exact determinant of an integer matrix by fraction-free elimination."""
    a = [list(row) for row in matrix]
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    previous = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            pivot = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if pivot is None:
                return 0
            a[k], a[pivot] = a[pivot], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // previous
        previous = a[k][k]
    return sign * a[n - 1][n - 1]


def kasteleyn_determinant(
    l: LatticeGraph, method: Literal["exact", "float"] = "exact"
) -> int:
    """|det K| for the Kasteleyn matrix of ``l``.

    ``exact`` eliminates the real form [[H, -V], [V, H]] of K = H + iV over
    the integers; its determinant is |det K|^2. ``float`` uses numpy's
    slogdet and rounds.

    Raises:
        IdentityViolationError: If the exact determinant is not a perfect square
    """
    matrix = kasteleyn_matrix(l)
    if method == "float":
        _, logabs = np.linalg.slogdet(matrix)
        return int(round(math.exp(logabs))) if np.isfinite(logabs) else 0

    real = np.real(matrix).astype(np.int64)
    imag = np.imag(matrix).astype(np.int64)
    embedding = np.block([[real, -imag], [imag, real]])
    squared = abs(bareiss_determinant(embedding.tolist()))
    root = math.isqrt(squared)
    if root * root != squared:
        raise IdentityViolationError(
            f"|det K|^2 = {squared} is not a perfect square", lhs=squared, rhs=root * root
        )
    logger.debug(f"Kasteleyn |det K| = {root} for L({l.rows}, {l.cols})")
    return root


def kasteleyn_tiling_count(
    l: LatticeGraph, method: Literal["exact", "float"] = "exact"
) -> MatchingCount:
    """Perfect matchings of ``l`` as the square root of |det K|.

    Raises:
        IdentityViolationError: If |det K| is not a perfect square, or the
            float estimate is not within FLOAT_DET_RTOL of an integer
    """
    if method == "float":
        _, logabs = np.linalg.slogdet(kasteleyn_matrix(l))
        if not np.isfinite(logabs):
            return MatchingCount(0)
        estimate = math.exp(logabs / 2)
        count = round(estimate)
        if abs(count - estimate) > FLOAT_DET_RTOL * max(1.0, estimate):
            raise IdentityViolationError(
                f"sqrt|det K| = {estimate} is not close to an integer", lhs=estimate, rhs=count
            )
        return MatchingCount(count)

    determinant = kasteleyn_determinant(l)
    root = math.isqrt(determinant)
    if root * root != determinant:
        raise IdentityViolationError(
            f"|det K| = {determinant} is not a perfect square", lhs=determinant, rhs=root * root
        )
    return MatchingCount(root)
