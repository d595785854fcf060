"""Tests for Clifford graph algebras and their centers."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from graph_dirac.clifford import (
    AlgebraElement,
    DisjointShape,
    GluedPathsShape,
    Monomial,
    PathShape,
    TreeClause,
    as_mask,
    center_basis,
    center_dimension,
    center_oracle,
    commutator,
    even_leaf_pairs,
    glued_path_graph,
    is_central_monomial,
    monomial_product,
    predicted_center_dim,
    render_support,
    tree_central_support_check,
)
from graph_dirac.exceptions import (
    NotATreeError,
    SizeBoundError,
    SupportError,
    UnsupportedCaseError,
)
from graph_dirac.graphs import (
    OrientedGraph,
    bridge_glue,
    complete_graph,
    cycle_graph,
    disjoint_union,
    empty_graph,
    path_graph,
)
from tests.strategies import oriented_graphs, trees


@pytest.fixture
def star():
    """K_{1,3}: vertex 0 joined to three leaves."""
    return OrientedGraph(4, ((0, 1), (0, 2), (0, 3)))


class TestSupports:
    """Tests for support masks and their rendering."""

    def test_as_mask(self):
        """Vertex lists and masks are interchangeable."""
        assert as_mask([0, 2]) == 0b101
        assert as_mask(6) == 6

    def test_negative_mask(self):
        """Masks cannot be negative."""
        with pytest.raises(ValueError):
            as_mask(-1)

    def test_render(self):
        """Generators render 1-based; the identity renders as 1."""
        assert render_support([0, 2, 4]) == "e1 e3 e5"
        assert render_support(0) == "1"


class TestProducts:
    """Tests for monomial multiplication."""

    def test_adjacent_generators_anticommute(self):
        """On P2, e1 e2 = -e2 e1."""
        g = path_graph(2)

        forward = monomial_product(g, Monomial.of(0), Monomial.of(1))
        backward = monomial_product(g, Monomial.of(1), Monomial.of(0))

        assert forward == Monomial(0b11, 1)
        assert backward == Monomial(0b11, -1)

    def test_non_adjacent_generators_commute(self):
        """On the empty graph every pair commutes."""
        g = empty_graph(2)

        assert monomial_product(g, Monomial.of(1), Monomial.of(0)) == Monomial(0b11, 1)

    def test_generator_squares_to_minus_one(self, p3):
        """e_i^2 = -1."""
        assert monomial_product(p3, Monomial.of(1), Monomial.of(1)) == Monomial(0, -1)

    def test_shared_generator(self):
        """On P2, (e1 e2) e2 = -e1."""
        g = path_graph(2)

        assert monomial_product(g, Monomial.of(0, 1), Monomial.of(1)) == Monomial(0b01, -1)

    def test_bivector_squares(self):
        """(e1 e2)^2 = -1 on P2 and +1 with no edge."""
        pair = Monomial.of(0, 1)

        assert monomial_product(path_graph(2), pair, pair).coefficient == -1
        assert monomial_product(empty_graph(2), pair, pair).coefficient == 1

    def test_support_outside_graph(self, p3):
        """Generators must be vertices."""
        with pytest.raises(ValueError):
            monomial_product(p3, Monomial.of(3), Monomial.of(0))

    @settings(max_examples=60)
    @given(
        oriented_graphs(min_vertices=1, max_vertices=6),
        st.integers(min_value=0, max_value=63),
        st.integers(min_value=0, max_value=63),
        st.integers(min_value=0, max_value=63),
    )
    def test_associative(self, g, a, b, c):
        """(ab)c = a(bc)."""
        full = (1 << g.vertex_count) - 1
        x, y, z = (Monomial(a & full), Monomial(b & full), Monomial(c & full))

        left = monomial_product(g, monomial_product(g, x, y), z)
        right = monomial_product(g, x, monomial_product(g, y, z))

        assert left == right

    @settings(max_examples=60)
    @given(
        oriented_graphs(min_vertices=1, max_vertices=6),
        st.integers(min_value=0, max_value=63),
        st.complex_numbers(allow_nan=False, allow_infinity=False, max_magnitude=1e6),
    )
    def test_identity_element(self, g, a, coefficient):
        """The empty support with coefficient 1 is a two-sided identity."""
        x = Monomial(a & ((1 << g.vertex_count) - 1), coefficient)
        one = Monomial()

        assert monomial_product(g, one, x) == x
        assert monomial_product(g, x, one) == x


class TestAlgebraElement:
    """Tests for linear combinations."""

    def test_sum_and_cancel(self, p3):
        """x - x is zero."""
        x = AlgebraElement.generator(p3, 0) + 2 * AlgebraElement.generator(p3, 2)

        assert (x - x).terms == {}

    def test_product_distributes(self, p3):
        """(1 + e1) e2 = e2 + e1 e2."""
        one = AlgebraElement.scalar(p3)
        e1 = AlgebraElement.generator(p3, 0)
        e2 = AlgebraElement.generator(p3, 1)

        assert (one + e1) * e2 == e2 + AlgebraElement(p3, {0b011: 1})

    def test_commutator_of_adjacent(self, p3):
        """[e1, e2] = 2 e1 e2."""
        e1 = AlgebraElement.generator(p3, 0)
        e2 = AlgebraElement.generator(p3, 1)

        assert commutator(e1, e2) == AlgebraElement(p3, {0b011: 2})

    def test_central_commutes_with_everything(self, p5):
        """e1 e3 e5 commutes with every generator of P5."""
        central = AlgebraElement.from_monomial(p5, Monomial.of(0, 2, 4))

        for v in range(5):
            assert commutator(central, AlgebraElement.generator(p5, v)).terms == {}

    def test_different_graphs(self, p3, p5):
        """Elements of different algebras do not mix."""
        with pytest.raises(ValueError):
            AlgebraElement.scalar(p3) + AlgebraElement.scalar(p5)

    def test_monomials_sorted(self, p3):
        """monomials() lists terms by support."""
        x = AlgebraElement(p3, {0b100: 3, 0b001: 1, 0b000: 0})

        assert x.monomials() == [Monomial(0b001, 1), Monomial(0b100, 3)]


class TestCenter:
    """Tests for center bases."""

    def test_p5(self, p5):
        """The center of P5 is spanned by 1 and e1 e3 e5."""
        assert center_basis(p5) == [0, 0b10101]

    def test_even_paths_trivial(self):
        """Even paths have a one-dimensional center."""
        for n in (2, 4, 6, 8):
            assert center_basis(path_graph(n)) == [0]

    def test_p4(self):
        """P4 has a perfect matching, so only scalars are central."""
        assert center_dimension(path_graph(4)) == 1

    def test_glued_at_middle(self):
        """P3 bridged at its middle to P3: a four-dimensional center."""
        g = glued_path_graph(3, 3, 2)

        assert center_basis(g) == [0, 0b000101, 0b101001, 0b101100]
        assert [render_support(s) for s in center_basis(g)] == [
            "1",
            "e1 e3",
            "e1 e4 e6",
            "e3 e4 e6",
        ]

    def test_glued_at_end_is_path(self):
        """Bridging at an endpoint makes a longer path."""
        assert center_dimension(glued_path_graph(3, 3, 3)) == 1
        assert center_dimension(bridge_glue(path_graph(2), path_graph(3), [(1, 0)])) == 2

    def test_triangle(self):
        """In K3 the product of all three generators is central."""
        assert center_basis(complete_graph(3)) == [0, 0b111]

    def test_empty_graph(self):
        """With no edges everything commutes."""
        assert center_dimension(empty_graph(3)) == 8

    def test_is_central_monomial(self, p5):
        """Central exactly when every vertex sees an even number of support vertices."""
        assert is_central_monomial(p5, [0, 2, 4])
        assert not is_central_monomial(p5, [0, 2])

    def test_size_bound(self):
        """Enumeration refuses graphs beyond its limit."""
        with pytest.raises(SizeBoundError) as exc_info:
            center_basis(path_graph(31))

        assert exc_info.value.limit == 30

    def test_oracle_size_bound(self):
        """The oracle has a tighter limit."""
        with pytest.raises(SizeBoundError):
            center_oracle(path_graph(15))

    @settings(max_examples=60, deadline=None)
    @given(oriented_graphs(max_vertices=9))
    def test_oracle_agrees(self, g):
        """The null-space basis matches direct commutation."""
        assert center_basis(g) == center_oracle(g)

    @pytest.mark.parametrize("n", [10, 11, 12])
    @pytest.mark.parametrize("p", [0.2, 0.5])
    def test_oracle_agrees_on_larger_graphs(self, random_graph, n, p):
        """Agreement persists up to twelve vertices."""
        g = random_graph(n, p, seed=n)

        assert center_basis(g) == center_oracle(g)

    @pytest.mark.parametrize("g", [path_graph(12), cycle_graph(12), complete_graph(12)])
    def test_oracle_agrees_on_families(self, g):
        """Paths, cycles and complete graphs on twelve vertices."""
        assert center_basis(g) == center_oracle(g)

    def test_oracle_cycle(self):
        """C4: opposite vertex pairs are central."""
        g = cycle_graph(4)

        assert center_oracle(g) == center_basis(g) == [0, 0b0101, 0b1010, 0b1111]


class TestPredictions:
    """Tests for predicted center dimensions."""

    def test_paths(self):
        """1 for even paths, 2 for odd ones."""
        assert [predicted_center_dim(PathShape(n)) for n in range(1, 7)] == [2, 1, 2, 1, 2, 1]

    @pytest.mark.parametrize("n", range(1, 8))
    @pytest.mark.parametrize("m", range(1, 8))
    def test_glued_paths_match_computed(self, n, m):
        """Every attachment point of P_n to P_m."""
        for k in range(1, n + 1):
            predicted = predicted_center_dim(GluedPathsShape(n, m, k))
            assert predicted == center_dimension(glued_path_graph(n, m, k)), (n, m, k)

    def test_glued_both_odd(self):
        """Both odd: 4 at an even attachment point, 1 at an odd one."""
        assert predicted_center_dim(GluedPathsShape(5, 3, 2)) == 4
        assert predicted_center_dim(GluedPathsShape(5, 3, 3)) == 1

    def test_disjoint_union_multiplies(self):
        """Center dimensions multiply over disjoint unions."""
        shape = DisjointShape((PathShape(3), PathShape(5), PathShape(4)))

        assert predicted_center_dim(shape) == 4
        union = disjoint_union(disjoint_union(path_graph(3), path_graph(5)), path_graph(4))
        assert center_dimension(union) == 4

    @settings(max_examples=50, deadline=None)
    @given(oriented_graphs(max_vertices=6), oriented_graphs(max_vertices=6))
    def test_disjoint_union_product_law(self, g1, g2):
        """Central supports of a union are exactly unions of central supports."""
        union = disjoint_union(g1, g2)
        low = (1 << g1.vertex_count) - 1
        center = center_basis(union)

        assert len(center) == center_dimension(g1) * center_dimension(g2)
        for support in center:
            assert is_central_monomial(g1, support & low)
            assert is_central_monomial(g2, support >> g1.vertex_count)
        shift = g1.vertex_count
        pairs = [a | b << shift for a in center_basis(g1) for b in center_basis(g2)]
        assert center == sorted(pairs)

    def test_disjoint_with_graph_part(self):
        """A plain graph part contributes its computed dimension."""
        shape = DisjointShape((PathShape(3), complete_graph(3)))

        assert predicted_center_dim(shape) == 4

    def test_bad_attachment(self):
        """k must be a vertex of P_n."""
        with pytest.raises(UnsupportedCaseError):
            predicted_center_dim(GluedPathsShape(3, 2, 4))
        with pytest.raises(UnsupportedCaseError):
            glued_path_graph(3, 2, 0)

    def test_empty_disjoint(self):
        """A union needs parts."""
        with pytest.raises(UnsupportedCaseError):
            predicted_center_dim(DisjointShape(()))


class TestTreeSupports:
    """Tests for the tree centrality clauses."""

    def test_central_support(self, p5):
        """e1 e3 e5 satisfies every clause."""
        assert tree_central_support_check(p5, [0, 2, 4]) == []

    def test_no_leaf(self, p5):
        """e2 e4 misses both leaves."""
        assert tree_central_support_check(p5, [1, 3]) == [TreeClause.LEAF]

    def test_adjacent_pair(self, p5):
        """e1 e2 has no distance-two partner and an adjacent pair."""
        assert tree_central_support_check(p5, [0, 1]) == [
            TreeClause.DISTANCE_TWO,
            TreeClause.ADJACENT,
        ]

    def test_parity(self, star):
        """Three leaves of a star meet every clause but the parity one."""
        assert tree_central_support_check(star, [1, 2, 3]) == [TreeClause.PARITY]

    def test_single_vertex(self):
        """A lone vertex is central."""
        assert tree_central_support_check(empty_graph(1), [0]) == []

    def test_empty_support(self, p5):
        """The identity is not a tree support."""
        with pytest.raises(SupportError):
            tree_central_support_check(p5, [])

    @pytest.mark.parametrize("support", [[-1], [5], [0, 7]])
    def test_support_outside_tree(self, p5, support):
        """Supports name vertices of the tree."""
        with pytest.raises(SupportError):
            tree_central_support_check(p5, support)

    def test_not_a_tree(self):
        """Cycles are refused."""
        with pytest.raises(NotATreeError):
            tree_central_support_check(cycle_graph(4), [0, 2])

    def test_forest_refused(self):
        """Disconnected graphs are refused too."""
        with pytest.raises(NotATreeError):
            even_leaf_pairs(empty_graph(2), [0, 1])

    def test_even_leaf_pairs(self, star, p5):
        """Leaves of a star are pairwise at distance two."""
        assert even_leaf_pairs(star, [1, 2, 3]) == [(1, 2), (1, 3), (2, 3)]
        assert even_leaf_pairs(p5, [0, 2, 4]) == [(0, 4)]

    @settings(max_examples=60, deadline=None)
    @given(trees(min_vertices=2, max_vertices=9), st.integers(min_value=1, max_value=511))
    def test_clauses_explain_centrality(self, g, mask):
        """A nonempty support is central exactly when no clause is violated."""
        mask &= (1 << g.vertex_count) - 1
        if mask == 0:
            mask = 1

        assert (tree_central_support_check(g, mask) == []) == is_central_monomial(g, mask)

    @settings(max_examples=60, deadline=None)
    @given(trees(min_vertices=2, max_vertices=10))
    def test_central_supports_have_even_leaf_pairs(self, g):
        """Every nonempty central support holds two leaves an even distance apart."""
        for support in center_basis(g)[1:]:
            assert even_leaf_pairs(g, support), support
