"""Tests for schema definitions."""

import json

import pytest
from pydantic import ValidationError

from schemas import (
    EvolutionParams,
    GluingCaseTerm,
    GluingIdentityReport,
    GluingSpec,
    GraphDocument,
    PartialSumReport,
    RootCheckReport,
    SettingsDocument,
)


class TestGraphDocument:
    """Tests for the graph document model."""

    def test_creation(self):
        """Vertices and edges are stored as given."""
        document = GraphDocument(vertices=3, edges=[(0, 1), (1, 2)])

        assert document.vertices == 3
        assert document.edges == [(0, 1), (1, 2)]

    def test_default_edges(self):
        """Edges default to none."""
        assert GraphDocument(vertices=2).edges == []

    def test_from_json(self):
        """JSON pairs become tuples."""
        document = GraphDocument.model_validate_json('{"vertices": 2, "edges": [[1, 0]]}')

        assert document.edges == [(1, 0)]

    def test_negative_vertices(self):
        """Vertex counts are non-negative."""
        with pytest.raises(ValidationError):
            GraphDocument(vertices=-1)

    def test_extra_keys(self):
        """Unknown keys are rejected."""
        with pytest.raises(ValidationError):
            GraphDocument.model_validate({"vertices": 1, "edges": [], "weights": []})

    def test_strict_integers(self):
        """Strings and floats are not vertex indices."""
        with pytest.raises(ValidationError):
            GraphDocument.model_validate({"vertices": 2, "edges": [["0", 1]]})
        with pytest.raises(ValidationError):
            GraphDocument.model_validate({"vertices": 2.0, "edges": []})

    def test_bad_edge_shape(self):
        """Edges are pairs."""
        with pytest.raises(ValidationError):
            GraphDocument.model_validate({"vertices": 3, "edges": [[0, 1, 2]]})

    def test_serialization(self):
        """model_dump_json writes edges as arrays."""
        document = GraphDocument(vertices=2, edges=[(0, 1)])

        assert json.loads(document.model_dump_json()) == {"vertices": 2, "edges": [[0, 1]]}


class TestGluingSpec:
    """Tests for the gluing specification."""

    def test_defaults(self):
        """No shift and no bridges by default."""
        spec = GluingSpec(k=3, m=2, n=2)

        assert spec.s == 0
        assert spec.bridges == frozenset()
        assert spec.overlap == 3

    def test_frozen(self):
        """Specs are immutable."""
        spec = GluingSpec(k=3, m=2, n=2)

        with pytest.raises(ValidationError):
            spec.k = 4

    def test_hashable(self):
        """Specs can key a dictionary."""
        assert {GluingSpec(k=2, m=1, n=1): 1}[GluingSpec(k=2, m=1, n=1)] == 1

    @pytest.mark.parametrize(
        "fields",
        [
            {"k": 0, "m": 1, "n": 1},
            {"k": 3, "m": 0, "n": 1},
            {"k": 3, "m": 1, "n": 1, "s": -1},
            {"k": 3, "m": 1, "n": 1, "s": 3},
            {"k": 3, "m": 1, "n": 1, "s": 2, "bridges": [2]},
            {"k": 3, "m": 1, "n": 1, "bridges": [0]},
        ],
    )
    def test_invalid(self, fields):
        """Dimensions, shift and labels are range-checked."""
        with pytest.raises(ValidationError):
            GluingSpec.model_validate(fields)


class TestEvolutionParams:
    """Tests for evolution parameters."""

    def test_defaults(self):
        """hbar 1 and an empty grid."""
        params = EvolutionParams()

        assert params.hbar == 1.0
        assert params.times == []

    def test_linspace_empty(self):
        """Zero steps gives no times."""
        assert EvolutionParams.linspace(0.0, 1.0, 0).times == []

    def test_decreasing(self):
        """Grids must increase."""
        with pytest.raises(ValidationError):
            EvolutionParams(times=[1.0, 0.5])


class TestReports:
    """Tests for the report models."""

    def test_root_check_report(self):
        """Root check reports round-trip through JSON."""
        report = RootCheckReport(kernel_side=3, cycle_side=3, max_abs_value=1e-15, tol=1e-9)

        assert RootCheckReport.model_validate_json(report.model_dump_json()) == report

    def test_partial_sum_variant(self):
        """Only the three sum identities are valid variants."""
        with pytest.raises(ValidationError):
            PartialSumReport(k=4, variant="geometric", n=3, direct=1, closed=1)

    def test_gluing_identity_report(self):
        """Terms keep their bridge labels."""
        report = GluingIdentityReport(
            k=2,
            m=1,
            n=1,
            terms=[GluingCaseTerm(bridges=[], count=1), GluingCaseTerm(bridges=[1, 2], count=1)],
            total=2,
            expected=2,
        )

        dumped = json.loads(report.model_dump_json())
        assert dumped["terms"][1] == {"bridges": [1, 2], "count": 1}


class TestSettingsDocument:
    """Tests for the settings file schema."""

    def test_defaults(self):
        """Every key has a default."""
        document = SettingsDocument()

        assert document.hbar == 1.0
        assert document.tol == 1e-9
        assert document.max_sweeps == 100
        assert document.float_digits == 17

    def test_unknown_key(self):
        """Typos in settings files are caught."""
        with pytest.raises(ValidationError):
            SettingsDocument.model_validate({"hbr": 2.0})

    def test_digit_bounds(self):
        """Printed digits stay within float precision."""
        with pytest.raises(ValidationError):
            SettingsDocument(float_digits=18)
