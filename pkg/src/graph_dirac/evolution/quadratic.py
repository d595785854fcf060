"""Quadratic forms of the graph operators and the root-superset check.

The forms are the bilinear ``psi^t M psi`` (no conjugation), evaluated
edge by edge or vertex by vertex rather than through the matrix:

- even:      sum over edges of (v_head - v_tail)^2
- odd:       sum over vertices of (sum of +e_j for edges entering,
             -e_j for edges leaving)^2
- incidence: 2 * sum over edges of e_j * (v_head - v_tail)
"""

import logging
from graph_dirac._compat import StrEnum

import numpy as np

from schemas.reports import RootCheckReport

from ..exceptions import IdentityViolationError, StateKindError
from ..graphs.oriented import OrientedGraph
from ..linops.operators import even_laplacian, incidence_dirac, odd_laplacian
from ..linops.spectral import kernel_basis
from .state import StateKind, StateVector, state_dimension

logger = logging.getLogger(__name__)

FORM_TOL = 1e-10


class FormKind(StrEnum):
    EVEN = "even"
    ODD = "odd"
    INCIDENCE = "incidence"


STATE_KIND_OF_FORM = {
    FormKind.EVEN: StateKind.VERTEX,
    FormKind.ODD: StateKind.EDGE,
    FormKind.INCIDENCE: StateKind.VERTEX_EDGE,
}


def _form_matrix(kind: FormKind, g: OrientedGraph) -> np.ndarray:
    if kind is FormKind.EVEN:
        return even_laplacian(g)
    if kind is FormKind.ODD:
        return odd_laplacian(g)
    return incidence_dirac(g)


def _evaluate(kind: FormKind, g: OrientedGraph, values: np.ndarray) -> complex:
    if kind is FormKind.EVEN:
        return complex(sum((values[head] - values[tail]) ** 2 for tail, head in g.edges))

    if kind is FormKind.ODD:
        total = 0j
        for vertex in range(g.vertex_count):
            flow = 0j
            for j in g.incident_edges[vertex]:
                flow += values[j] if g.head(j) == vertex else -values[j]
            total += flow**2
        return total

    vertex_part = values[: g.vertex_count]
    edge_part = values[g.vertex_count :]
    return complex(
        2
        * sum(
            edge_part[j] * (vertex_part[head] - vertex_part[tail])
            for j, (tail, head) in enumerate(g.edges)
        )
    )


def quadratic_form(
    kind: FormKind | str, g: OrientedGraph, psi: StateVector, check: bool = True
) -> complex:
    """Evaluate a quadratic form from its graph formula.

    Args:
        kind: ``even``, ``odd`` or ``incidence``
        g: Graph the state lives on
        psi: Vertex, edge or vertex-edge state matching ``kind``
        check: Also compute psi^t M psi and require agreement

    Raises:
        StateKindError: If psi's kind does not match the form
        DimensionMismatchError: If psi's length does not fit g
        IdentityViolationError: If the formula and psi^t M psi disagree
    """
    kind = FormKind(kind)
    expected_kind = STATE_KIND_OF_FORM[kind]
    if psi.kind is not expected_kind:
        raise StateKindError(
            f"{kind.value} form takes a {expected_kind.value} state, got {psi.kind.value}"
        )
    psi = StateVector.for_graph(g, psi.kind, psi.values)

    value = _evaluate(kind, g, psi.values)
    if check:
        matrix = _form_matrix(kind, g)
        direct = complex(psi.values @ matrix @ psi.values)
        scale = max(1.0, float(np.linalg.norm(matrix)) * psi.norm**2)
        if abs(value - direct) > FORM_TOL * scale:
            raise IdentityViolationError(
                f"{kind.value} form disagrees with psi^t M psi", lhs=value, rhs=direct
            )
    return value


def _random_complex(rng: np.random.Generator, size: int) -> np.ndarray:
    return rng.standard_normal(size) + 1j * rng.standard_normal(size)


def _random_combination(
    rng: np.random.Generator, basis: list[np.ndarray], size: int
) -> np.ndarray:
    combination = np.zeros(size, dtype=np.complex128)
    for vector in basis:
        combination += complex(*rng.standard_normal(2)) * vector
    return combination


def root_superset_check(
    g: OrientedGraph, samples: int, seed: int = 0, tol: float = 1e-9
) -> RootCheckReport:
    """Sample ker(even) + any edge state, and any vertex state + ker(odd).

    Every sample must be a root of the incidence form, to within
    ``tol * max(1, ||psi||^2)``.

    Raises:
        IdentityViolationError: If a sample is not a root
    """
    rng = np.random.default_rng(seed)
    vertex_kernel = kernel_basis(even_laplacian(g).astype(np.float64), tol)
    edge_kernel = kernel_basis(odd_laplacian(g).astype(np.float64), tol)
    v_dim = state_dimension(g, StateKind.VERTEX)
    e_dim = state_dimension(g, StateKind.EDGE)

    largest = 0.0
    for side in ("kernel", "cycle"):
        for _ in range(samples):
            if side == "kernel":
                vertex_values = _random_combination(rng, vertex_kernel, v_dim)
                edge_values = _random_complex(rng, e_dim)
            else:
                vertex_values = _random_complex(rng, v_dim)
                edge_values = _random_combination(rng, edge_kernel, e_dim)
            psi = StateVector.concat(
                StateVector(StateKind.VERTEX, vertex_values),
                StateVector(StateKind.EDGE, edge_values),
            )
            value = quadratic_form(FormKind.INCIDENCE, g, psi)
            bound = tol * max(1.0, psi.norm**2)
            if abs(value) > bound:
                raise IdentityViolationError(
                    f"{side}-side sample is not a root of the incidence form"
                    f" (|q| = {abs(value):.3e})",
                    lhs=value,
                    rhs=0,
                )
            largest = max(largest, abs(value))

    logger.debug(f"Root check passed {2 * samples} samples, max |q| = {largest:.3e}")
    return RootCheckReport(kernel_side=samples, cycle_side=samples, max_abs_value=largest, tol=tol)
