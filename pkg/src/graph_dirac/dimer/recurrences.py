"""Domino tiling counts T_k(n) of k x n rectangles for k = 2, 3, 4.

The counts satisfy linear recurrences with integer coefficients whose last
coefficient is +-1, so the recurrences run backwards too. Negative indices
are used only inside closed expressions, never returned to callers.

    T_2(n) = T_2(n-1) + T_2(n-2)
    T_3(n) = 4 T_3(n-2) - T_3(n-4)
    T_4(n) = T_4(n-1) + 5 T_4(n-2) + T_4(n-3) - T_4(n-4)
"""

import logging
import math
from typing import Literal

from schemas.reports import PartialSumReport

from ..exceptions import IdentityViolationError, UnsupportedCaseError
from .matching import MatchingCount

logger = logging.getLogger(__name__)

SUPPORTED_HEIGHTS = (2, 3, 4)

# T(n) = sum(c[i] * T(n - 1 - i)), seeded with T(0), T(1), ...
_RECURRENCES: dict[int, tuple[tuple[int, ...], tuple[int, ...]]] = {
    2: ((1, 1), (1, 1)),
    3: ((0, 4, 0, -1), (1, 0, 3, 0)),
    4: ((1, 5, 1, -1), (1, 1, 5, 11)),
}

PartialSumVariant = Literal["even-index", "consecutive", "alternating"]


def check_height(k: int) -> None:
    if k not in SUPPORTED_HEIGHTS:
        raise UnsupportedCaseError(f"tiling counts are only known for k in 2..4, got k={k}")


def exact_div(numerator: int, denominator: int) -> int:
    """Integer division that must leave no remainder."""
    quotient, remainder = divmod(numerator, denominator)
    if remainder:
        raise IdentityViolationError(
            f"{numerator} is not divisible by {denominator}", lhs=numerator, rhs=denominator
        )
    return quotient


def sequence_value(k: int, n: int) -> int:
    """T_k(n) for any integer n, extending the recurrence backwards below 0."""
    check_height(k)
    coeffs, seeds = _RECURRENCES[k]
    order = len(coeffs)
    if 0 <= n < order:
        return seeds[n]

    window = list(seeds)
    if n >= order:
        for _ in range(n - order + 1):
            window.append(sum(c * window[-1 - i] for i, c in enumerate(coeffs)))
            window.pop(0)
        return window[-1]

    # window holds T(lo) .. T(lo + order - 1); step lo down to n
    for _ in range(-n):
        newest = window[-1]
        inner = sum(c * window[-2 - i] for i, c in enumerate(coeffs[:-1]))
        window.insert(0, (newest - inner) // coeffs[-1])
        window.pop()
    return window[0]


def tiling_count(k: int, n: int) -> MatchingCount:
    """Number of domino tilings of the k x n rectangle, i.e. perfect matchings of L(k, n).

    Raises:
        UnsupportedCaseError: If k is not 2, 3 or 4, or n is negative
    """
    check_height(k)
    if n < 0:
        raise UnsupportedCaseError(f"tiling counts need n >= 0, got {n}")
    return MatchingCount(sequence_value(k, n))


_SQRT6 = math.sqrt(6.0)
_ALPHA3 = (math.sqrt(2.0) + _SQRT6) / 2
_SQRT29 = math.sqrt(29.0)
_A4 = (1 + _SQRT29 + math.sqrt(14 + 2 * _SQRT29)) / 4
_B4 = (1 - _SQRT29 - math.sqrt(14 - 2 * _SQRT29)) / 4


def _closed_t4(n: int) -> float:
    a, b = _A4, _B4
    d_b = (1 - 1 / b**2) * (1 - b / a) * (1 - a * b)
    d_a = (1 - 1 / a**2) * (1 - a / b) * (1 - a * b)
    return (
        (6 / b + 5 - 1 / b**3) / d_b * b**n
        - (6 * b + 5 - b**3) / d_b * b ** (-n)
        + (6 / a + 5 - 1 / a**3) / d_a * a**n
        - (6 * a + 5 - a**3) / d_a * a ** (-n)
    )


def tiling_closed(k: int, n: int) -> float:
    """Closed-form (floating point) value of T_k(n) for k = 3 or 4.

    Raises:
        UnsupportedCaseError: For any other k
    """
    if k == 3:
        parity = 1 - (-1) ** (n + 1)
        return parity * (_ALPHA3 ** (n + 1) + _ALPHA3 ** (-(n + 1))) / (2 * _SQRT6)
    if k == 4:
        return _closed_t4(n)
    raise UnsupportedCaseError(f"no closed form for k={k}")


def alternating_numerator(n: int) -> int:
    t_n, t_2, t_3, t_4 = (sequence_value(4, n - i) for i in (0, 2, 3, 4))
    return -2 * t_n + 20 * t_2 + 7 * t_3 - 5 * t_4


def alternating_sum(n: int) -> int:
    """T_4(n-2) + T_4(n-4) + ... down to index 0 or 1, by closed expression."""
    return exact_div(alternating_numerator(n), 5)


def corner_count(k: int, x: int) -> int:
    """Tilings of k x x with the top corner cell (k=3) or top two cells (k=4) of
    the last column removed."""
    if k == 3:
        return exact_div(sequence_value(3, x + 1) - sequence_value(3, x - 1), 2)
    if k == 4:
        return exact_div(sequence_value(4, x + 1) - sequence_value(4, x - 2), 5)
    raise UnsupportedCaseError(f"corner counts exist only for k in (3, 4), got k={k}")


def partial_sums(k: int, variant: PartialSumVariant, n: int) -> PartialSumReport:
    """Evaluate a sum identity both term by term and in closed form.

    - ``even-index`` (k=3, n even): T_3(0) + T_3(2) + ... + T_3(n-2)
    - ``consecutive`` (k=4): T_4(0) + ... + T_4(n-2)
    - ``alternating`` (k=4): T_4(n-2) + T_4(n-4) + ...

    Raises:
        UnsupportedCaseError: If the variant does not apply to (k, n)
        IdentityViolationError: If the two sides disagree
    """
    if n < 0:
        raise UnsupportedCaseError(f"sum identities need n >= 0, got {n}")

    if variant == "even-index" and k == 3:
        if n % 2:
            raise UnsupportedCaseError(f"the even-index sum needs even n, got {n}")
        direct = sum(sequence_value(3, 2 * i) for i in range(n // 2))
        closed = exact_div(sequence_value(3, n) - sequence_value(3, n - 2), 2)
    elif variant == "consecutive" and k == 4:
        direct = sum(sequence_value(4, i) for i in range(n - 1))
        closed = exact_div(sequence_value(4, n) - sequence_value(4, n - 3), 5)
    elif variant == "alternating" and k == 4:
        direct = sum(sequence_value(4, n - 2 * i) for i in range(1, n // 2 + 1))
        closed = alternating_sum(n)
    else:
        raise UnsupportedCaseError(f"no {variant} sum identity for k={k}")

    if direct != closed:
        raise IdentityViolationError(
            f"{variant} sum for k={k}, n={n}: {direct} != {closed}", lhs=direct, rhs=closed
        )
    logger.debug(f"{variant} sum for k={k}, n={n} = {direct}")
    return PartialSumReport(k=k, variant=variant, n=n, direct=direct, closed=closed)
