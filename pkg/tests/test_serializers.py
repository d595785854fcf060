"""Tests for matrix and time-series serializers."""

import csv
import io
import json

import numpy as np
import pytest

from graph_dirac.evolution import TimeSeriesRow
from graph_dirac.exceptions import GraphDocumentError
from graph_dirac.serializers import (
    TIME_SERIES_HEADER,
    decode_matrix,
    encode_matrix,
    format_complex,
    format_float,
    matrix_rows,
    render_matrix,
    save_time_series,
    time_series_csv,
    write_time_series,
)


@pytest.fixture
def rows():
    return [
        TimeSeriesRow(t=0.0, avg_re=0.5, avg_im=0.0, avg_angle=0.0, norm=1.0),
        TimeSeriesRow(t=0.5, avg_re=-0.25, avg_im=0.125, avg_angle=2.5, norm=1.0),
    ]


class TestFormatting:
    """Tests for number formatting."""

    def test_zero(self):
        """Negative zero prints as 0."""
        assert format_float(-0.0) == "0"

    def test_digits(self):
        """Significant digits are honoured."""
        assert format_float(1 / 3, 5) == "0.33333"
        assert format_float(0.1) == "0.10000000000000001"

    def test_complex(self):
        """Complex values print as re+imj."""
        assert format_complex(complex(1.5, -2.0)) == "1.5-2j"
        assert format_complex(complex(0.0, 0.0)) == "0+0j"

    def test_render_integers(self):
        """Integer matrices print compactly."""
        assert render_matrix(np.array([[2, 1], [1, 2]])) == "[[2,1],[1,2]]"

    def test_render_integral_floats(self):
        """Floats with integral values print without a decimal point."""
        assert render_matrix(np.array([[1.0, 0.5]])) == "[[1,0.5]]"

    def test_render_complex(self):
        """Complex entries print as pairs."""
        assert render_matrix(np.array([[1j]]), digits=3) == "[[[0,1]]]"


class TestMatrixDocuments:
    """Tests for JSON matrix documents."""

    def test_integer_rows(self):
        """Integer matrices stay integer."""
        assert matrix_rows(np.array([[1, -1]], dtype=np.int64)) == [[1, -1]]

    def test_object_rows(self):
        """Object arrays of Python ints stay exact."""
        big = np.array([[2**70]], dtype=object)

        assert matrix_rows(big) == [[2**70]]

    def test_encode(self):
        """Encoding is compact JSON."""
        assert encode_matrix(np.array([[0, 1], [1, 0]])) == "[[0,1],[1,0]]"

    def test_decode_integer(self):
        """Integer documents decode to int64."""
        decoded = decode_matrix("[[0,1],[1,0]]")

        assert decoded.dtype == np.int64
        np.testing.assert_array_equal(decoded, [[0, 1], [1, 0]])

    def test_decode_complex(self):
        """Pairs decode to complex entries."""
        decoded = decode_matrix("[[[0.0,1.0],2.5]]")

        assert decoded[0, 0] == 1j
        assert decoded[0, 1] == 2.5

    def test_float_exactness(self):
        """Floats survive encoding bit for bit."""
        m = np.array([[0.1, 1 / 3], [np.pi, -2e-300]])

        np.testing.assert_array_equal(decode_matrix(encode_matrix(m)), m)

    def test_complex_exactness(self):
        """Complex matrices survive encoding bit for bit."""
        m = np.array([[1 / 3 + 0.1j, 0j]])

        np.testing.assert_array_equal(decode_matrix(encode_matrix(m)), m)

    def test_ragged(self):
        """Rows must have equal length."""
        with pytest.raises(GraphDocumentError):
            decode_matrix("[[1,2],[3]]")

    def test_not_a_matrix(self):
        """Non-numeric entries are refused."""
        with pytest.raises(GraphDocumentError) as exc_info:
            decode_matrix('[["a"]]')

        assert exc_info.value.errors

    def test_empty(self):
        """An empty document is a 0x0 matrix."""
        assert decode_matrix("[]").shape == (0, 0)


class TestTimeSeries:
    """Tests for the CSV output."""

    def test_header_and_rows(self, rows):
        """One header line and one line per row."""
        text = time_series_csv(rows)
        lines = text.splitlines()

        assert lines[0] == ",".join(TIME_SERIES_HEADER)
        assert lines[1] == "0,0.5,0,0,1"
        assert lines[2] == "0.5,-0.25,0.125,2.5,1"

    def test_parses_back(self, rows):
        """The output is ordinary CSV."""
        records = list(csv.DictReader(io.StringIO(time_series_csv(rows))))

        assert [float(r["avg_re"]) for r in records] == [0.5, -0.25]

    def test_write_returns_count(self, rows):
        """write_time_series reports how many rows it wrote."""
        assert write_time_series(rows, io.StringIO()) == 2

    def test_empty_series(self):
        """No rows still writes the header."""
        assert time_series_csv([]) == "t,avg_re,avg_im,avg_angle,norm\n"

    def test_save(self, rows, tmp_path):
        """save_time_series creates parent directories."""
        path = tmp_path / "runs" / "p3.csv"

        save_time_series(rows, path)

        assert path.read_text().startswith("t,avg_re")

    def test_digits(self, rows):
        """Fewer digits shorten the output."""
        row = TimeSeriesRow(t=1 / 3, avg_re=0.0, avg_im=0.0, avg_angle=0.0, norm=1.0)

        assert time_series_csv([row], digits=4).splitlines()[1].startswith("0.3333,")


def test_encode_is_json():
    """Encoded matrices are plain JSON arrays."""
    assert json.loads(encode_matrix(np.eye(2))) == [[1.0, 0.0], [0.0, 1.0]]
