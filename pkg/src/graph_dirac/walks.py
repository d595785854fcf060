"""Signed vertex-edge walks and powers of the incidence Dirac operator.

A vertex-edge walk alternates between vertices and incident edges. Each
step is signed -1 when the vertex involved is the edge's tail and +1 when it
is the head, whichever way the step goes. Entry (a, b) of the k-th power of
the incidence Dirac operator is the signed count of k-step walks from a to b.
"""

import logging
from collections.abc import Iterator
from dataclasses import dataclass
from graph_dirac._compat import StrEnum

import numpy as np

from .exceptions import WalkError
from .graphs.oriented import OrientedGraph
from .linops.operators import incidence_dirac

logger = logging.getLogger(__name__)


class ElementTag(StrEnum):
    VERTEX = "v"
    EDGE = "e"


@dataclass(frozen=True)
class WalkElement:
    """A vertex or an edge, 0-based. Renders 1-based, e.g. ``v1`` or ``e2``."""

    tag: ElementTag
    index: int

    @classmethod
    def vertex(cls, index: int) -> "WalkElement":
        return cls(ElementTag.VERTEX, index)

    @classmethod
    def edge(cls, index: int) -> "WalkElement":
        return cls(ElementTag.EDGE, index)

    @classmethod
    def parse(cls, label: str) -> "WalkElement":
        """Parse a 1-based label such as ``v3`` or ``e1``."""
        label = label.strip()
        try:
            tag = ElementTag(label[:1])
            number = int(label[1:])
        except ValueError:
            raise WalkError(
                f"cannot parse walk element '{label}' (expected v<n> or e<n>)"
            ) from None
        if number < 1:
            raise WalkError(f"walk element labels are 1-based, got '{label}'")
        return cls(tag, number - 1)

    @property
    def sort_key(self) -> tuple[int, int]:
        return (self.index, 0 if self.tag is ElementTag.VERTEX else 1)

    def __str__(self) -> str:
        return f"{self.tag.value}{self.index + 1}"


@dataclass(frozen=True)
class SignedWalk:
    """Walk of len(steps) - 1 steps with the product of its step signs."""

    steps: tuple[WalkElement, ...]
    sign: int

    @property
    def length(self) -> int:
        return len(self.steps) - 1


def _check_element(g: OrientedGraph, element: WalkElement) -> None:
    bound = g.vertex_count if element.tag is ElementTag.VERTEX else g.edge_count
    if not 0 <= element.index < bound:
        raise WalkError(f"{element} does not exist in this graph")


def element_index(g: OrientedGraph, element: WalkElement) -> int:
    """Row/column of ``element`` in the incidence Dirac operator."""
    _check_element(g, element)
    if element.tag is ElementTag.VERTEX:
        return element.index
    return g.vertex_count + element.index


def element_at(g: OrientedGraph, index: int) -> WalkElement:
    """Element at row/column ``index`` of the incidence Dirac operator.

    Raises:
        WalkError: If index is outside the operator
    """
    if not 0 <= index < g.vertex_count + g.edge_count:
        raise WalkError(f"index {index} is outside the incidence Dirac operator")
    if index < g.vertex_count:
        return WalkElement.vertex(index)
    return WalkElement.edge(index - g.vertex_count)


def step_sign(g: OrientedGraph, a: WalkElement, b: WalkElement) -> int:
    """Sign of one step between a vertex and an incident edge, in either order.

    Raises:
        WalkError: If the pair is not a vertex and an edge incident to it
    """
    _check_element(g, a)
    _check_element(g, b)
    if a.tag is b.tag:
        raise WalkError(f"a step joins a vertex and an edge, got {a} and {b}")
    vertex, edge = (a, b) if a.tag is ElementTag.VERTEX else (b, a)
    tail, head = g.edges[edge.index]
    if vertex.index == tail:
        return -1
    if vertex.index == head:
        return 1
    raise WalkError(f"{vertex} is not incident to {edge}")


def _next_elements(g: OrientedGraph, element: WalkElement) -> list[WalkElement]:
    if element.tag is ElementTag.VERTEX:
        return [WalkElement.edge(j) for j in g.incident_edges[element.index]]
    tail, head = g.edges[element.index]
    return [WalkElement.vertex(v) for v in sorted((tail, head))]


def _expand(
    g: OrientedGraph,
    path: list[WalkElement],
    sign: int,
    end: WalkElement,
    remaining: int,
) -> Iterator[SignedWalk]:
    current = path[-1]
    if remaining == 0:
        if current == end:
            yield SignedWalk(tuple(path), sign)
        return
    for following in sorted(_next_elements(g, current), key=lambda el: el.sort_key):
        path.append(following)
        yield from _expand(g, path, sign * step_sign(g, current, following), end, remaining - 1)
        path.pop()


def enumerate_signed_walks(
    g: OrientedGraph, start: WalkElement, end: WalkElement, k: int
) -> list[SignedWalk]:
    """All k-step walks from start to end, depth first in element order.

    Raises:
        WalkError: If k is negative or an endpoint does not exist in g
    """
    if k < 0:
        raise WalkError(f"walk length must be non-negative, got {k}")
    _check_element(g, start)
    _check_element(g, end)
    # tags alternate, so the endpoints fix the parity of k
    if (start.tag is end.tag) != (k % 2 == 0):
        return []
    return list(_expand(g, [start], 1, end, k))


def signed_walk_sum(g: OrientedGraph, start: WalkElement, end: WalkElement, k: int) -> int:
    return sum(walk.sign for walk in enumerate_signed_walks(g, start, end, k))


def walk_count_matrix(g: OrientedGraph, k: int) -> np.ndarray:
    """k-th power of the incidence Dirac operator over Python integers.

    The result has object dtype so entries never overflow.

    Raises:
        WalkError: If k is negative
    """
    if k < 0:
        raise WalkError(f"walk length must be non-negative, got {k}")
    dirac = incidence_dirac(g).astype(object)
    size = dirac.shape[0]
    power = np.array(
        [[1 if i == j else 0 for j in range(size)] for i in range(size)], dtype=object
    ).reshape(size, size)
    for _ in range(k):
        power = power.dot(dirac)
    return power


def render_walk(walk: SignedWalk) -> str:
    """Text form such as ``v1 -> e2 -> v3 -> e1  sgn=-1``."""
    return " -> ".join(str(element) for element in walk.steps) + f"  sgn={walk.sign}"
