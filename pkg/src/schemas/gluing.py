"""Shift/bridge gluing specification for two lattice graphs."""

from pydantic import BaseModel, Field, model_validator


class GluingSpec(BaseModel):
    """Gluing of L(k, m) on the left to L(k, n) on the right.

    The right lattice is shifted down by ``s`` rows, leaving an overlap of
    ``k - s`` rows. Bridge ``e_j`` (1-based, top to bottom) joins row
    ``j - 1 + s`` of the left lattice's last column to row ``j - 1`` of the
    right lattice's first column.

    Attributes:
        k: Rows of both lattices
        m: Columns of the left lattice
        n: Columns of the right lattice
        s: Downward shift of the right lattice
        bridges: 1-based labels of the bridges present (and forced)
    """

    k: int = Field(ge=1)
    m: int = Field(ge=1)
    n: int = Field(ge=1)
    s: int = Field(default=0, ge=0)
    bridges: frozenset[int] = frozenset()

    model_config = {"frozen": True}

    @model_validator(mode="after")
    def _check_overlap(self) -> "GluingSpec":
        if self.s > self.k - 1:
            raise ValueError(f"shift {self.s} leaves no overlap for k={self.k}")
        for label in self.bridges:
            if not 1 <= label <= self.overlap:
                raise ValueError(f"bridge label e{label} outside 1..{self.overlap}")
        return self

    @property
    def overlap(self) -> int:
        return self.k - self.s

    @property
    def sorted_bridges(self) -> tuple[int, ...]:
        return tuple(sorted(self.bridges))
