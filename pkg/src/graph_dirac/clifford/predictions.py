"""Predicted center dimensions for paths, bridge-glued paths and disjoint unions."""

from dataclasses import dataclass

from ..exceptions import UnsupportedCaseError
from ..graphs.gluing import bridge_glue
from ..graphs.oriented import OrientedGraph, path_graph
from .center import center_dimension


@dataclass(frozen=True)
class PathShape:
    n: int


@dataclass(frozen=True)
class GluedPathsShape:
    """P_n with its vertex ``k`` (1-based) bridged to an endpoint of P_m."""

    n: int
    m: int
    k: int


@dataclass(frozen=True)
class DisjointShape:
    """Disjoint union; a plain graph part contributes its computed dimension."""

    parts: tuple["CenterShape | OrientedGraph", ...]


CenterShape = PathShape | GluedPathsShape | DisjointShape


def glued_path_graph(n: int, m: int, k: int) -> OrientedGraph:
    """P_n followed by P_m, plus the bridge from vertex k of P_n (1-based) to vertex 0 of P_m."""
    if n < 1 or m < 1 or not 1 <= k <= n:
        raise UnsupportedCaseError(f"cannot attach at vertex {k} of P_{n} to P_{m}")
    return bridge_glue(path_graph(n), path_graph(m), [(k - 1, 0)])


def predicted_center_dim(shape: CenterShape | OrientedGraph) -> int:
    """Center dimension the path, gluing and tensor theorems predict.

    Raises:
        UnsupportedCaseError: If the shape parameters fall outside the theorems
    """
    if isinstance(shape, OrientedGraph):
        return center_dimension(shape)

    if isinstance(shape, PathShape):
        if shape.n < 1:
            raise UnsupportedCaseError(f"P_{shape.n} is not a path")
        return 1 if shape.n % 2 == 0 else 2

    if isinstance(shape, GluedPathsShape):
        n, m, k = shape.n, shape.m, shape.k
        if n < 1 or m < 1 or not 1 <= k <= n:
            raise UnsupportedCaseError(f"cannot attach at vertex {k} of P_{n} to P_{m}")
        if k in (1, n):
            return predicted_center_dim(PathShape(n + m))
        odd = n % 2 + m % 2
        if odd == 0:
            return 1
        if odd == 1:
            return 2
        # both odd: an odd k splits P_n into two odd paths, one of which
        # regroups with P_m into an even path
        return 4 if k % 2 == 0 else 1

    if isinstance(shape, DisjointShape):
        if not shape.parts:
            raise UnsupportedCaseError("a disjoint union needs at least one part")
        dimension = 1
        for part in shape.parts:
            dimension *= predicted_center_dim(part)
        return dimension

    raise UnsupportedCaseError(f"no center prediction for {shape!r}")
