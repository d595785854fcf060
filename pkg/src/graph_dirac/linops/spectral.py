"""Symmetric eigendecomposition by cyclic Jacobi rotations, and kernels.

Every operator this package builds is real symmetric, so the Jacobi solver
is the default. Complex Hermitian input is routed to LAPACK (numpy.linalg.eigh).
"""

import logging
import math
from dataclasses import dataclass
from typing import Literal

import numpy as np

from ..exceptions import ConvergenceError, NotSymmetricError

logger = logging.getLogger(__name__)

JACOBI_TOL = 1e-13
MAX_SWEEPS = 100
SYMMETRY_TOL = 1e-12
SIGN_EPS = 1e-12


@dataclass(frozen=True, eq=False)
class Spectrum:
    """Full orthonormal eigendecomposition of a symmetric matrix.

    Attributes:
        eigenvalues: Real eigenvalues, ascending
        eigenvectors: Orthonormal eigenvectors as columns, same order; each
            column's first clearly nonzero entry is positive
    """

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray

    def __len__(self) -> int:
        return len(self.eigenvalues)


def check_symmetric(m: np.ndarray, tol: float = SYMMETRY_TOL) -> None:
    """Raise NotSymmetricError unless max|M - M^H| <= tol * ||M||."""
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise NotSymmetricError(f"expected a square matrix, got shape {m.shape}")
    asymmetry = float(np.max(np.abs(m - m.conj().T))) if m.size else 0.0
    if asymmetry > tol * float(np.linalg.norm(m)):
        raise NotSymmetricError(
            f"matrix is not symmetric (max |M - M^H| = {asymmetry:.3e})",
            asymmetry=asymmetry,
        )


def _rotate(a: np.ndarray, vectors: np.ndarray, p: int, q: int, c: float, s: float) -> None:
    """Apply A <- P^T A P and V <- V P for the (p, q) plane rotation, in place."""
    col_p = a[:, p].copy()
    col_q = a[:, q].copy()
    a[:, p] = c * col_p - s * col_q
    a[:, q] = s * col_p + c * col_q

    row_p = a[p, :].copy()
    row_q = a[q, :].copy()
    a[p, :] = c * row_p - s * row_q
    a[q, :] = s * row_p + c * row_q
    a[p, q] = a[q, p] = 0.0

    vec_p = vectors[:, p].copy()
    vec_q = vectors[:, q].copy()
    vectors[:, p] = c * vec_p - s * vec_q
    vectors[:, q] = s * vec_p + c * vec_q


def _negligible(apq: float, app: float, aqq: float) -> bool:
    """True when 100|apq| is below the rounding level of both diagonal entries."""
    g = 100.0 * abs(apq)
    return abs(app) + g == abs(app) and abs(aqq) + g == abs(aqq)


def jacobi_eigh(
    m: np.ndarray, tol: float = JACOBI_TOL, max_sweeps: int = MAX_SWEEPS
) -> tuple[np.ndarray, np.ndarray]:
    """Cyclic Jacobi eigendecomposition of a real symmetric matrix.

    Sweeps over every (p, q) pair with p < q until the off-diagonal Frobenius
    mass falls below ``tol * ||M||``. Output is unsorted.

    Raises:
        ConvergenceError: If the sweep limit is reached first
    """
    a = np.array(m, dtype=np.float64)
    n = a.shape[0]
    vectors = np.eye(n)
    scale = float(np.linalg.norm(a))
    if n == 0 or scale == 0.0:
        return np.diag(a).copy(), vectors

    for sweep in range(max_sweeps + 1):
        off = float(np.linalg.norm(a - np.diag(np.diag(a))))
        if off < tol * scale:
            logger.debug(f"Jacobi converged after {sweep} sweeps (n={n})")
            return np.diag(a).copy(), vectors
        if sweep == max_sweeps:
            break

        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                if sweep > 3 and _negligible(apq, a[p, p], a[q, q]):
                    a[p, q] = a[q, p] = 0.0
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                t = 1.0 / (abs(theta) + math.hypot(theta, 1.0))
                if theta < 0.0:
                    t = -t
                c = 1.0 / math.sqrt(t * t + 1.0)
                _rotate(a, vectors, p, q, c, t * c)

    raise ConvergenceError(
        f"Jacobi eigensolver did not converge in {max_sweeps} sweeps (n={n})",
        sweeps=max_sweeps,
    )


def _normalized(values: np.ndarray, vectors: np.ndarray) -> Spectrum:
    order = np.argsort(values, kind="stable")
    values = np.real(values[order]).astype(np.float64)
    vectors = vectors[:, order].copy()
    for i in range(vectors.shape[1]):
        column = vectors[:, i]
        leading = np.flatnonzero(np.abs(column) > SIGN_EPS)
        if leading.size:
            pivot = column[leading[0]]
            if np.iscomplexobj(column):
                vectors[:, i] = column * (abs(pivot) / pivot)
            elif pivot < 0:
                vectors[:, i] = -column
    return Spectrum(eigenvalues=values, eigenvectors=vectors)


def spectrum(
    m: np.ndarray,
    method: Literal["jacobi", "lapack"] = "jacobi",
    tol: float = JACOBI_TOL,
    max_sweeps: int = MAX_SWEEPS,
) -> Spectrum:
    """Orthonormal eigendecomposition with ascending eigenvalues.

    Args:
        m: Real symmetric or complex Hermitian matrix
        method: ``jacobi`` (default) or ``lapack``; Hermitian input with a
            nonzero imaginary part always uses LAPACK
        tol: Jacobi stopping threshold, relative to ||M||
        max_sweeps: Jacobi sweep limit

    Raises:
        NotSymmetricError: If m is not symmetric/Hermitian
        ConvergenceError: If Jacobi does not converge
    """
    m = np.asarray(m)
    check_symmetric(m)
    if np.iscomplexobj(m) and np.any(np.imag(m) != 0):
        logger.debug("Hermitian input with imaginary part; using LAPACK")
        values, vectors = np.linalg.eigh(m)
        return _normalized(values, vectors)
    real = np.real(m).astype(np.float64)
    if method == "lapack":
        values, vectors = np.linalg.eigh(real)
    else:
        values, vectors = jacobi_eigh(real, tol=tol, max_sweeps=max_sweeps)
    return _normalized(values, vectors)


def kernel_threshold(m: np.ndarray, tol: float) -> float:
    return tol * max(1.0, float(np.linalg.norm(m)))


def kernel_basis(m: np.ndarray, tol: float = 1e-9, **kwargs) -> list[np.ndarray]:
    """Orthonormal basis of the eigenvectors with |lambda| <= tol * max(1, ||M||)."""
    decomposition = spectrum(m, **kwargs)
    threshold = kernel_threshold(np.asarray(m), tol)
    return [
        decomposition.eigenvectors[:, i].copy()
        for i, value in enumerate(decomposition.eigenvalues)
        if abs(value) <= threshold
    ]
