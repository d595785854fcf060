"""Tiling counts of two lattices glued along a seam of forced bridges.

Every count here factors into one term per side. A side is a lattice with
some cells of its seam column removed (the cells the bridges cover), and
each shape the seam can leave has a closed expression in T_k. The products
are formed over numerators first and divided exactly at the end.
"""

import logging
from collections.abc import Mapping
from itertools import combinations
from typing import Any

from pydantic import ValidationError

from schemas.gluing import GluingSpec
from schemas.reports import GluingCaseTerm, GluingIdentityReport

from ..exceptions import GluingError, IdentityViolationError
from ..graphs.gluing import bridge_glue
from ..graphs.oriented import OrientedGraph
from .lattice import lattice
from .matching import MatchingCount, count_matchings_brute
from .recurrences import alternating_numerator, check_height, exact_div, sequence_value

logger = logging.getLogger(__name__)


def parse_gluing_spec(fields: Mapping[str, Any]) -> GluingSpec:
    """Validate raw gluing fields.

    Raises:
        GluingError: If the shift or a bridge label is out of range
    """
    try:
        return GluingSpec.model_validate(dict(fields))
    except ValidationError as e:
        details = "; ".join(err["msg"] for err in e.errors())
        raise GluingError(f"invalid gluing: {details}") from e


def _left_rows(spec: GluingSpec) -> frozenset[int]:
    return frozenset(b - 1 + spec.s for b in spec.bridges)


def _right_rows(spec: GluingSpec) -> frozenset[int]:
    return frozenset(b - 1 for b in spec.bridges)


def glued_lattice(spec: GluingSpec) -> OrientedGraph:
    """L(k, m) and L(k, n) joined by the bridges in ``spec``.

    Bridges follow the edges of both lattices, in label order.
    """
    left = lattice(spec.k, spec.m)
    right = lattice(spec.k, spec.n)
    pairs = [
        (left.vertex_at(b - 1 + spec.s, spec.m - 1), right.vertex_at(b - 1, 0))
        for b in spec.sorted_bridges
    ]
    return bridge_glue(left.graph, right.graph, pairs)


def bridge_edge_indices(spec: GluingSpec) -> tuple[int, ...]:
    """Indices of the bridge edges in ``glued_lattice(spec)``."""
    k = spec.k
    inner = (k * (spec.m - 1) + (k - 1) * spec.m) + (k * (spec.n - 1) + (k - 1) * spec.n)
    return tuple(range(inner, inner + len(spec.bridges)))


def _side(k: int, x: int, removed: frozenset[int]) -> tuple[int, int]:
    """Tilings of L(k, x) less the ``removed`` rows of its seam column, as a fraction."""
    if not removed:
        return sequence_value(k, x), 1
    if len(removed) == k:
        return sequence_value(k, x - 1), 1
    if len(removed) % 2 != (k * x) % 2:
        return 0, 1

    if k == 3:
        if removed in ({0}, {2}):
            return sequence_value(3, x + 1) - sequence_value(3, x - 1), 2
        if removed in ({0, 1}, {1, 2}):
            return sequence_value(3, x) - sequence_value(3, x - 2), 2
    elif k == 4:
        if removed in ({0, 1}, {2, 3}):
            return sequence_value(4, x + 1) - sequence_value(4, x - 2), 5
        if removed == {1, 2}:
            return alternating_numerator(x), 5
        if removed == {0, 3}:
            return alternating_numerator(x + 1), 5
    # what is left: removed cells share a colour, or the middle row of k=3
    return 0, 1


def glued_tiling_count(spec: GluingSpec) -> MatchingCount:
    """Perfect matchings of the glued lattice that use every bridge.

    Raises:
        UnsupportedCaseError: If k is not 2, 3 or 4
    """
    check_height(spec.k)
    if spec.k % 2 == 0 and len(spec.bridges) % 2 == 1:
        return MatchingCount(0)

    left_num, left_den = _side(spec.k, spec.m, _left_rows(spec))
    right_num, right_den = _side(spec.k, spec.n, _right_rows(spec))
    count = exact_div(left_num * right_num, left_den * right_den)
    logger.debug(
        f"Glued count k={spec.k} m={spec.m} n={spec.n} s={spec.s} "
        f"B={list(spec.sorted_bridges)}: {count}"
    )
    return MatchingCount(count)


def glued_tiling_brute(spec: GluingSpec) -> MatchingCount:
    """The same count by searching the glued lattice directly."""
    return count_matchings_brute(glued_lattice(spec), forced_edges=bridge_edge_indices(spec))


def gluing_identity_check(k: int, m: int, n: int) -> GluingIdentityReport:
    """Split T_k(m + n) over every bridge subset of the full, unshifted seam.

    Raises:
        UnsupportedCaseError: If k is not 2, 3 or 4
        GluingError: If m or n is below 1
        IdentityViolationError: If the terms do not add up to T_k(m + n)
    """
    check_height(k)
    terms: list[GluingCaseTerm] = []
    for size in range(k + 1):
        for subset in combinations(range(1, k + 1), size):
            spec = parse_gluing_spec({"k": k, "m": m, "n": n, "bridges": frozenset(subset)})
            terms.append(GluingCaseTerm(bridges=list(subset), count=glued_tiling_count(spec)))

    total = sum(term.count for term in terms)
    expected = sequence_value(k, m + n)
    if total != expected:
        raise IdentityViolationError(
            f"glued counts for k={k}, m={m}, n={n} sum to {total}, expected {expected}",
            lhs=total,
            rhs=expected,
        )
    return GluingIdentityReport(k=k, m=m, n=n, terms=terms, total=total, expected=expected)
