"""Laplace and Dirac operators of an oriented graph.

The integer operators (incidence, both Laplacians, incidence Dirac) are
returned as int64 arrays so identities between them can be checked exactly.
The spectral Dirac operators are float64 square roots of the Laplacians.
"""

import logging
from abc import ABC, abstractmethod
from graph_dirac._compat import StrEnum

import numpy as np

from ..exceptions import IdentityViolationError, UnsupportedCaseError
from ..graphs.oriented import OrientedGraph, incidence_matrix
from .spectral import spectrum

logger = logging.getLogger(__name__)

NEGATIVE_CLAMP = 1e-10


class Parity(StrEnum):
    EVEN = "even"
    ODD = "odd"


def degree_minus_adjacency(g: OrientedGraph) -> np.ndarray:
    """D - A, the orientation-free form of the even Laplacian."""
    matrix = np.zeros((g.vertex_count, g.vertex_count), dtype=np.int64)
    for tail, head in g.edges:
        matrix[tail, head] -= 1
        matrix[head, tail] -= 1
        matrix[tail, tail] += 1
        matrix[head, head] += 1
    return matrix


def even_laplacian(g: OrientedGraph) -> np.ndarray:
    """I I^t on vertex states, checked against D - A.

    Raises:
        IdentityViolationError: If the two constructions disagree
    """
    inc = incidence_matrix(g)
    laplacian = inc @ inc.T
    alternative = degree_minus_adjacency(g)
    if not np.array_equal(laplacian, alternative):
        raise IdentityViolationError(
            "I I^t differs from D - A", lhs=laplacian.tolist(), rhs=alternative.tolist()
        )
    return laplacian


def odd_laplacian(g: OrientedGraph) -> np.ndarray:
    """I^t I on edge states."""
    inc = incidence_matrix(g)
    return inc.T @ inc


def incidence_dirac(g: OrientedGraph) -> np.ndarray:
    """Block matrix [[0, I], [I^t, 0]] on vertex-edge states."""
    inc = incidence_matrix(g)
    v, e = g.vertex_count, g.edge_count
    dirac = np.zeros((v + e, v + e), dtype=np.int64)
    dirac[:v, v:] = inc
    dirac[v:, :v] = inc.T
    return dirac


def psd_sqrt(m: np.ndarray) -> np.ndarray:
    """Q sqrt(D) Q^t for a symmetric non-negative definite matrix.

    Eigenvalues in [-1e-10 * max(1, ||M||), 0) are clamped to zero.

    Raises:
        IdentityViolationError: If an eigenvalue is clearly negative
    """
    decomposition = spectrum(m)
    floor = -NEGATIVE_CLAMP * max(1.0, float(np.linalg.norm(m)))
    values = decomposition.eigenvalues
    if values.size and values[0] < floor:
        raise IdentityViolationError(
            f"matrix is not non-negative definite (eigenvalue {values[0]:.3e})",
            lhs=float(values[0]),
            rhs=0.0,
        )
    q = decomposition.eigenvectors
    root = q @ np.diag(np.sqrt(np.clip(values, 0.0, None))) @ q.T
    return (root + root.T) / 2.0


def spectral_dirac(g: OrientedGraph, parity: Parity | str) -> np.ndarray:
    """The non-negative square root of the even or odd Laplacian."""
    parity = Parity(parity)
    laplacian = even_laplacian(g) if parity is Parity.EVEN else odd_laplacian(g)
    return psd_sqrt(laplacian.astype(np.float64))


def dirac_eigenvalue_pairs(g: OrientedGraph, tol: float = 1e-9) -> np.ndarray:
    """Predicted nonzero spectrum of the incidence Dirac operator, ascending.

    Each nonzero eigenvalue lambda of the even Laplacian contributes the pair
    +sqrt(lambda), -sqrt(lambda).
    """
    laplacian = even_laplacian(g).astype(np.float64)
    values = spectrum(laplacian).eigenvalues
    threshold = tol * max(1.0, float(np.linalg.norm(laplacian)))
    roots = np.sqrt(values[values > threshold])
    return np.sort(np.concatenate([-roots, roots]))


class GraphOperator(ABC):
    """A matrix-valued construction on oriented graphs."""

    name: str

    @abstractmethod
    def build(self, g: OrientedGraph) -> np.ndarray:
        """Build the operator's matrix for ``g``."""
        pass


class IncidenceOperator(GraphOperator):
    name = "incidence"

    def build(self, g: OrientedGraph) -> np.ndarray:
        return incidence_matrix(g)


class EvenLaplacian(GraphOperator):
    name = "even-laplacian"

    def build(self, g: OrientedGraph) -> np.ndarray:
        return even_laplacian(g)


class OddLaplacian(GraphOperator):
    name = "odd-laplacian"

    def build(self, g: OrientedGraph) -> np.ndarray:
        return odd_laplacian(g)


class IncidenceDirac(GraphOperator):
    name = "incidence-dirac"

    def build(self, g: OrientedGraph) -> np.ndarray:
        return incidence_dirac(g)


class SpectralDirac(GraphOperator):
    def __init__(self, parity: Parity):
        self.parity = parity
        self.name = f"{parity.value}-dirac"

    def build(self, g: OrientedGraph) -> np.ndarray:
        return spectral_dirac(g, self.parity)


OPERATORS: dict[str, GraphOperator] = {
    op.name: op
    for op in (
        IncidenceOperator(),
        EvenLaplacian(),
        OddLaplacian(),
        IncidenceDirac(),
        SpectralDirac(Parity.EVEN),
        SpectralDirac(Parity.ODD),
    )
}


def operator_matrix(name: str, g: OrientedGraph) -> np.ndarray:
    """Look up an operator by CLI name and build it for ``g``.

    Raises:
        UnsupportedCaseError: If the name is unknown
    """
    try:
        op = OPERATORS[name]
    except KeyError:
        known = ", ".join(sorted(OPERATORS))
        raise UnsupportedCaseError(f"unknown operator '{name}' (known: {known})") from None
    logger.debug(f"Building {name} for graph with {g.vertex_count} vertices")
    return op.build(g)
