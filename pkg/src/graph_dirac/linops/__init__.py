"""Graph operators and their spectral analysis."""

from .operators import (
    OPERATORS,
    EvenLaplacian,
    GraphOperator,
    IncidenceDirac,
    IncidenceOperator,
    OddLaplacian,
    Parity,
    SpectralDirac,
    degree_minus_adjacency,
    dirac_eigenvalue_pairs,
    even_laplacian,
    incidence_dirac,
    odd_laplacian,
    operator_matrix,
    psd_sqrt,
    spectral_dirac,
)
from .spectral import Spectrum, check_symmetric, jacobi_eigh, kernel_basis, spectrum

__all__ = [
    "OPERATORS",
    "GraphOperator",
    "IncidenceOperator",
    "EvenLaplacian",
    "OddLaplacian",
    "IncidenceDirac",
    "SpectralDirac",
    "Parity",
    "Spectrum",
    "check_symmetric",
    "degree_minus_adjacency",
    "dirac_eigenvalue_pairs",
    "even_laplacian",
    "incidence_dirac",
    "jacobi_eigh",
    "kernel_basis",
    "odd_laplacian",
    "operator_matrix",
    "psd_sqrt",
    "spectral_dirac",
    "spectrum",
]
