"""Settings file schema (``graph-dirac.yaml``)."""

from pydantic import BaseModel, Field


class SettingsDocument(BaseModel):
    """Defaults a settings file may override.

    Attributes:
        hbar: Reduced Planck constant used by evolve/steady
        tol: Relative kernel and steady-state tolerance
        max_sweeps: Jacobi sweep limit before giving up
        jacobi_tol: Off-diagonal mass (relative) at which Jacobi stops
        seed: Seed for sampled checks
        samples: Samples per side for the root superset check
        float_digits: Significant digits when printing floats
    """

    hbar: float = Field(default=1.0, gt=0)
    tol: float = Field(default=1e-9, gt=0)
    max_sweeps: int = Field(default=100, ge=1)
    jacobi_tol: float = Field(default=1e-13, gt=0)
    seed: int = 0
    samples: int = Field(default=20, ge=1)
    float_digits: int = Field(default=17, ge=1, le=17)

    model_config = {"extra": "forbid"}
