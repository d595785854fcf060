"""Serializers for matrices and evolution time series."""

from .matrix import (
    FLOAT_DIGITS,
    decode_matrix,
    encode_matrix,
    format_complex,
    format_float,
    matrix_rows,
    render_matrix,
)
from .timeseries import TIME_SERIES_HEADER, save_time_series, time_series_csv, write_time_series

__all__ = [
    "FLOAT_DIGITS",
    "TIME_SERIES_HEADER",
    "decode_matrix",
    "encode_matrix",
    "format_complex",
    "format_float",
    "matrix_rows",
    "render_matrix",
    "save_time_series",
    "time_series_csv",
    "write_time_series",
]
