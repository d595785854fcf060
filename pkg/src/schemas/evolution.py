"""Parameters for discrete Schrödinger/Dirac time evolution."""

from pydantic import BaseModel, Field, field_validator


class EvolutionParams(BaseModel):
    """Time grid and Planck constant for an evolution run.

    Attributes:
        hbar: Reduced Planck constant, strictly positive
        times: Strictly increasing time grid (may be empty)
    """

    hbar: float = Field(default=1.0, gt=0)
    times: list[float] = []

    @field_validator("times")
    @classmethod
    def _strictly_increasing(cls, times: list[float]) -> list[float]:
        for earlier, later in zip(times, times[1:]):
            if not later > earlier:
                raise ValueError(f"time grid not strictly increasing at {earlier} -> {later}")
        return times

    @classmethod
    def linspace(
        cls, start: float, stop: float, steps: int, hbar: float = 1.0
    ) -> "EvolutionParams":
        """Evenly spaced grid of ``steps`` points from start to stop inclusive."""
        if steps <= 0:
            return cls(hbar=hbar, times=[])
        if steps == 1:
            return cls(hbar=hbar, times=[start])
        width = (stop - start) / (steps - 1)
        return cls(hbar=hbar, times=[start + i * width for i in range(steps)])
