"""Report models returned by the identity and theorem checks.

Each report carries both sides of the identity it checked so callers (and
the CLI's ``--json`` output) can show the evidence, not just a verdict.
"""

from typing import Literal

from pydantic import BaseModel


class RootCheckReport(BaseModel):
    """Outcome of sampling both halves of the incidence-Dirac root superset.

    Attributes:
        kernel_side: Samples of the form ker(even Laplacian) + any edge state
        cycle_side: Samples of the form any vertex state + ker(odd Laplacian)
        max_abs_value: Largest |q| observed over all samples
        tol: Tolerance each sample was held to
    """

    kernel_side: int
    cycle_side: int
    max_abs_value: float
    tol: float


class PartialSumReport(BaseModel):
    """Direct summation against the closed right-hand side of a sum identity.

    Attributes:
        k: Lattice height
        variant: Which sum identity was evaluated
        n: Argument of the identity
        direct: Value of the summation, term by term
        closed: Value of the closed expression
    """

    k: int
    variant: Literal["even-index", "consecutive", "alternating"]
    n: int
    direct: int
    closed: int


class GluingCaseTerm(BaseModel):
    """One (s = 0, B) contribution to a gluing identity.

    Attributes:
        bridges: 1-based bridge labels forced into the matching
        count: Glued tiling count for this bridge set
    """

    bridges: list[int]
    count: int


class GluingIdentityReport(BaseModel):
    """Seam decomposition of T_k(m + n) into glued counts.

    Attributes:
        k: Lattice height
        m: Columns left of the seam
        n: Columns right of the seam
        terms: Every bridge subset of the full seam with its count
        total: Sum of the term counts
        expected: T_k(m + n) by recurrence
    """

    k: int
    m: int
    n: int
    terms: list[GluingCaseTerm]
    total: int
    expected: int
