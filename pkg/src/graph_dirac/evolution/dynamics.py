"""Discrete Schrödinger/Dirac time evolution.

A state evolves as psi(t) = exp((i/hbar) * A * t) psi(0) for a symmetric
operator A. The exponential is evaluated through one cached spectral
decomposition, A = Q diag(lambda) Q^t, as Q diag(exp(i lambda t / hbar)) Q^t.
"""

import logging
import math
from collections.abc import Sequence
from dataclasses import dataclass
from typing import Literal

import numpy as np

from schemas.evolution import EvolutionParams

from ..exceptions import DimensionMismatchError, StateKindError
from ..graphs.oriented import OrientedGraph
from ..linops.operators import odd_laplacian
from ..linops.spectral import check_symmetric, spectrum
from .state import StateKind, StateVector

logger = logging.getLogger(__name__)


def _check_dimension(op: np.ndarray, psi: StateVector) -> None:
    if op.shape[0] != len(psi):
        raise DimensionMismatchError(
            f"operator is {op.shape[0]}x{op.shape[1]} but state has {len(psi)} entries",
            expected=op.shape[0],
            actual=len(psi),
        )


class Propagator:
    """exp((i/hbar) A t) for one operator A, at any number of times.

    Args:
        op: Real symmetric operator
        hbar: Reduced Planck constant (must be positive)
    """

    def __init__(self, op: np.ndarray, hbar: float = 1.0):
        if hbar <= 0:
            raise ValueError(f"hbar must be positive, got {hbar}")
        op = np.asarray(op)
        check_symmetric(op)
        self.op = op
        self.hbar = hbar
        decomposition = spectrum(op)
        self._eigenvalues = decomposition.eigenvalues
        self._q = decomposition.eigenvectors

    def unitary(self, t: float) -> np.ndarray:
        phases = np.exp(1j * self._eigenvalues * t / self.hbar)
        return (self._q * phases) @ self._q.conj().T

    def evolve(self, psi: StateVector, t: float) -> StateVector:
        _check_dimension(self.op, psi)
        coefficients = self._q.conj().T @ psi.values
        phases = np.exp(1j * self._eigenvalues * t / self.hbar)
        return psi.with_values(self._q @ (phases * coefficients))

    def evolve_many(self, psi: StateVector, times: Sequence[float]) -> np.ndarray:
        """States at every time as rows, in grid order."""
        _check_dimension(self.op, psi)
        if len(times) == 0:
            return np.zeros((0, len(psi)), dtype=np.complex128)
        coefficients = self._q.conj().T @ psi.values
        grid = np.asarray(times, dtype=np.float64)
        phases = np.exp(1j * np.outer(grid, self._eigenvalues) / self.hbar)
        return (phases * coefficients) @ self._q.T


def evolve(op: np.ndarray, psi0: StateVector, t: float, hbar: float = 1.0) -> StateVector:
    """U(t) psi0 with U(t) = exp((i/hbar) op t).

    Raises:
        NotSymmetricError: If op is not symmetric
        DimensionMismatchError: If op and psi0 disagree on dimension
    """
    op = np.asarray(op)
    _check_dimension(op, psi0)
    return Propagator(op, hbar).evolve(psi0, t)


def taylor_evolve(
    op: np.ndarray, psi0: StateVector, t: float, hbar: float = 1.0, terms: int = 20
) -> StateVector:
    """Partial Taylor sum of exp((i/hbar) op t) applied to psi0."""
    op = np.asarray(op, dtype=np.complex128)
    _check_dimension(op, psi0)
    generator = (1j * t / hbar) * op
    term = psi0.values.copy()
    total = term.copy()
    for k in range(1, terms):
        term = generator @ term / k
        total = total + term
    return psi0.with_values(total)


def is_steady(op: np.ndarray, psi0: StateVector, tol: float = 1e-9) -> bool:
    """Kernel membership: ||op psi0|| <= tol * max(1, ||op||) * ||psi0||."""
    op = np.asarray(op)
    _check_dimension(op, psi0)
    residual = float(np.linalg.norm(op @ psi0.values))
    bound = tol * max(1.0, float(np.linalg.norm(op))) * psi0.norm
    return residual <= bound


def average(psi: StateVector) -> complex:
    """Arithmetic mean of the state's entries.

    Raises:
        StateKindError: If the state is empty
    """
    if len(psi) == 0:
        raise StateKindError("average of an empty state is undefined")
    return complex(np.mean(psi.values))


def average_angle(value: complex) -> float:
    """atan2(im, re) in (-pi, pi]."""
    angle = math.atan2(value.imag, value.real)
    if angle <= -math.pi:
        angle = math.pi
    return angle


@dataclass(frozen=True)
class TimeSeriesRow:
    t: float
    avg_re: float
    avg_im: float
    avg_angle: float
    norm: float


def time_series(
    op: np.ndarray,
    psi0: StateVector,
    params: EvolutionParams,
    method: Literal["spectral", "taylor"] = "spectral",
) -> list[TimeSeriesRow]:
    """Average position, average angle and norm of psi(t) at every grid time.

    ``method="taylor"`` replaces the spectral propagator with the partial
    Taylor sum at each time, for cross-checking short grids.
    """
    op = np.asarray(op)
    _check_dimension(op, psi0)
    if method == "spectral":
        states = Propagator(op, params.hbar).evolve_many(psi0, params.times)
    elif method == "taylor":
        check_symmetric(op)
        states = np.array(
            [taylor_evolve(op, psi0, t, params.hbar).values for t in params.times],
            dtype=np.complex128,
        )
    else:
        raise ValueError(f"unknown evolution method '{method}'")

    rows: list[TimeSeriesRow] = []
    for t, values in zip(params.times, states):
        mean = average(psi0.with_values(values))
        rows.append(
            TimeSeriesRow(
                t=float(t),
                avg_re=mean.real,
                avg_im=mean.imag,
                avg_angle=average_angle(mean),
                norm=float(np.linalg.norm(values)),
            )
        )
    logger.debug(f"Evaluated {len(rows)} time points")
    return rows


@dataclass(frozen=True)
class OddAverageExperiment:
    """Average drift of an edge state under the odd Laplacian.

    Attributes:
        rows: Time series of the evolution
        max_drift: Largest |mu(psi_t) - mu(psi_0)| over the grid
    """

    rows: list[TimeSeriesRow]
    max_drift: float


def odd_average_experiment(
    g: OrientedGraph, psi0: StateVector, params: EvolutionParams
) -> OddAverageExperiment:
    """Evolve an edge state under the odd Laplacian and measure average drift."""
    if psi0.kind is not StateKind.EDGE:
        raise StateKindError(f"odd Laplacian evolves edge states, got {psi0.kind.value}")
    rows = time_series(odd_laplacian(g), psi0, params)
    start = average(psi0)
    drift = max(
        (abs(complex(row.avg_re, row.avg_im) - start) for row in rows),
        default=0.0,
    )
    return OddAverageExperiment(rows=rows, max_drift=drift)
