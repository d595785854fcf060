"""Quantum states on the vertices and/or edges of an oriented graph."""

from collections.abc import Sequence
from dataclasses import dataclass
from graph_dirac._compat import StrEnum

import numpy as np

from ..exceptions import DimensionMismatchError, StateKindError
from ..graphs.oriented import OrientedGraph
from ..graphs.topology import CycleBasisElement


class StateKind(StrEnum):
    VERTEX = "vertex"
    EDGE = "edge"
    VERTEX_EDGE = "vertex-edge"


def state_dimension(g: OrientedGraph, kind: StateKind) -> int:
    if kind is StateKind.VERTEX:
        return g.vertex_count
    if kind is StateKind.EDGE:
        return g.edge_count
    return g.vertex_count + g.edge_count


@dataclass(frozen=True, eq=False)
class StateVector:
    """Complex-valued state of a given kind.

    Attributes:
        kind: Whether the entries live on vertices, edges, or both (vertices
            first, then edges)
        values: Complex entries
    """

    kind: StateKind
    values: np.ndarray

    def __post_init__(self) -> None:
        object.__setattr__(self, "kind", StateKind(self.kind))
        object.__setattr__(self, "values", np.asarray(self.values, dtype=np.complex128).ravel())

    def __len__(self) -> int:
        return len(self.values)

    @classmethod
    def for_graph(
        cls, g: OrientedGraph, kind: StateKind | str, values: Sequence[complex] | np.ndarray
    ) -> "StateVector":
        """State bound to ``g``; its length must match the kind's dimension.

        Raises:
            DimensionMismatchError: If the length is wrong for ``g``
        """
        state = cls(StateKind(kind), np.asarray(values))
        expected = state_dimension(g, state.kind)
        if len(state) != expected:
            raise DimensionMismatchError(
                f"{state.kind.value} state needs {expected} entries, got {len(state)}",
                expected=expected,
                actual=len(state),
            )
        return state

    @classmethod
    def constant(cls, kind: StateKind | str, g: OrientedGraph, value: complex) -> "StateVector":
        kind = StateKind(kind)
        return cls(kind, np.full(state_dimension(g, kind), value, dtype=np.complex128))

    @classmethod
    def from_cycle(cls, g: OrientedGraph, element: CycleBasisElement) -> "StateVector":
        """Edge state equal to a cycle basis element."""
        return cls.for_graph(g, StateKind.EDGE, element.coefficients)

    @classmethod
    def concat(cls, vertex_part: "StateVector", edge_part: "StateVector") -> "StateVector":
        if vertex_part.kind is not StateKind.VERTEX or edge_part.kind is not StateKind.EDGE:
            raise StateKindError("concat needs a vertex state followed by an edge state")
        return cls(StateKind.VERTEX_EDGE, np.concatenate([vertex_part.values, edge_part.values]))

    def split(self, g: OrientedGraph) -> tuple[np.ndarray, np.ndarray]:
        """Vertex and edge halves of a vertex-edge state."""
        if self.kind is not StateKind.VERTEX_EDGE:
            raise StateKindError(f"cannot split a {self.kind.value} state")
        return self.values[: g.vertex_count], self.values[g.vertex_count :]

    @property
    def norm(self) -> float:
        return float(np.linalg.norm(self.values))

    def with_values(self, values: np.ndarray) -> "StateVector":
        return StateVector(self.kind, values)
