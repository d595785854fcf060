"""Clifford graph algebras.

The algebra of a graph has one generator e_i per vertex, with e_i^2 = -1.
Generators of adjacent vertices anticommute and all others commute. A
monomial e_a is the product of the generators in its support, taken in
ascending order, and supports are stored as vertex bitmasks.
"""

from collections.abc import Iterable, Mapping
from dataclasses import dataclass

from ..graphs.oriented import OrientedGraph

Support = int | Iterable[int]


def as_mask(support: Support) -> int:
    """Bitmask of a support given either as a mask or as vertex indices."""
    if isinstance(support, int):
        if support < 0:
            raise ValueError(f"support mask must be non-negative, got {support}")
        return support
    mask = 0
    for v in support:
        mask |= 1 << v
    return mask


def generators_of(mask: int) -> tuple[int, ...]:
    return tuple(i for i in range(mask.bit_length()) if mask >> i & 1)


def render_support(support: Support) -> str:
    """``1`` for the identity, otherwise 1-based generators such as ``e1 e3 e5``."""
    generators = generators_of(as_mask(support))
    if not generators:
        return "1"
    return " ".join(f"e{i + 1}" for i in generators)


@dataclass(frozen=True)
class Monomial:
    """coefficient * e_support.

    Attributes:
        support: Vertex bitmask of the generators
        coefficient: Scalar factor
    """

    support: int = 0
    coefficient: complex = 1

    @classmethod
    def of(cls, *vertices: int) -> "Monomial":
        """Product of the given generators after reordering them ascending."""
        return cls(as_mask(vertices))

    @property
    def generators(self) -> tuple[int, ...]:
        return generators_of(self.support)

    @property
    def is_zero(self) -> bool:
        return self.coefficient == 0

    def scaled(self, factor: complex) -> "Monomial":
        return Monomial(self.support, self.coefficient * factor)

    def __str__(self) -> str:
        return f"{self.coefficient} {render_support(self.support)}"


def _check_support(g: OrientedGraph, mask: int) -> None:
    if mask >> g.vertex_count:
        raise ValueError(f"support {render_support(mask)} uses vertices outside the graph")


def product_sign(g: OrientedGraph, a: int, b: int) -> int:
    """Sign of e_a * e_b relative to e_(a xor b).

    The generators of ``a`` then ``b`` are insertion sorted. Each transposition
    of two adjacent vertices flips the sign, and each generator present in
    both supports squares to -1 once sorted.
    """
    sequence = list(generators_of(a)) + list(generators_of(b))
    masks = g.neighbor_masks
    sign = 1
    for i in range(1, len(sequence)):
        j = i
        while j > 0 and sequence[j - 1] > sequence[j]:
            if masks[sequence[j]] >> sequence[j - 1] & 1:
                sign = -sign
            sequence[j - 1], sequence[j] = sequence[j], sequence[j - 1]
            j -= 1
    if (a & b).bit_count() % 2:
        sign = -sign
    return sign


def monomial_product(g: OrientedGraph, a: Monomial, b: Monomial) -> Monomial:
    """Canonical form of a * b in the Clifford algebra of g.

    Raises:
        ValueError: If a support names a vertex outside g
    """
    _check_support(g, a.support)
    _check_support(g, b.support)
    sign = product_sign(g, a.support, b.support)
    return Monomial(a.support ^ b.support, sign * a.coefficient * b.coefficient)


class AlgebraElement:
    """Linear combination of monomials in the Clifford algebra of a graph.

    Zero coefficients are dropped, so two elements are equal exactly when
    they have the same graph and the same nonzero terms.
    """

    def __init__(self, graph: OrientedGraph, terms: Mapping[int, complex] | None = None):
        self.graph = graph
        self.terms: dict[int, complex] = {}
        for mask, coefficient in (terms or {}).items():
            _check_support(graph, mask)
            if coefficient != 0:
                self.terms[mask] = complex(coefficient)

    @classmethod
    def from_monomial(cls, graph: OrientedGraph, monomial: Monomial) -> "AlgebraElement":
        return cls(graph, {monomial.support: monomial.coefficient})

    @classmethod
    def generator(cls, graph: OrientedGraph, vertex: int) -> "AlgebraElement":
        return cls(graph, {1 << vertex: 1})

    @classmethod
    def scalar(cls, graph: OrientedGraph, value: complex = 1) -> "AlgebraElement":
        return cls(graph, {0: value})

    def monomials(self) -> list[Monomial]:
        return [Monomial(mask, c) for mask, c in sorted(self.terms.items())]

    def _same_graph(self, other: "AlgebraElement") -> None:
        if other.graph != self.graph:
            raise ValueError("cannot combine elements of different graph algebras")

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        self._same_graph(other)
        merged = dict(self.terms)
        for mask, coefficient in other.terms.items():
            merged[mask] = merged.get(mask, 0) + coefficient
        return AlgebraElement(self.graph, merged)

    def __neg__(self) -> "AlgebraElement":
        return AlgebraElement(self.graph, {mask: -c for mask, c in self.terms.items()})

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        return self + (-other)

    def __mul__(self, other: "AlgebraElement | complex") -> "AlgebraElement":
        if not isinstance(other, AlgebraElement):
            return AlgebraElement(self.graph, {m: c * other for m, c in self.terms.items()})
        self._same_graph(other)
        product: dict[int, complex] = {}
        for a, ca in self.terms.items():
            for b, cb in other.terms.items():
                sign = product_sign(self.graph, a, b)
                product[a ^ b] = product.get(a ^ b, 0) + sign * ca * cb
        return AlgebraElement(self.graph, product)

    def __rmul__(self, other: complex) -> "AlgebraElement":
        return self * other

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.graph == other.graph and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.graph, frozenset(self.terms.items())))

    def __repr__(self) -> str:
        body = " + ".join(f"({c}) {render_support(m)}" for m, c in sorted(self.terms.items()))
        return f"AlgebraElement({body or '0'})"


def commutator(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    """ab - ba."""
    return a * b - b * a
