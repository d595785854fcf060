"""CSV output for evolution time series."""

import csv
import io
from collections.abc import Iterable
from pathlib import Path
from typing import TextIO

from ..evolution.dynamics import TimeSeriesRow
from .matrix import FLOAT_DIGITS, format_float

TIME_SERIES_HEADER = ("t", "avg_re", "avg_im", "avg_angle", "norm")


def write_time_series(
    rows: Iterable[TimeSeriesRow], stream: TextIO, digits: int = FLOAT_DIGITS
) -> int:
    """Write the header and one line per row; returns the number of rows written."""
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(TIME_SERIES_HEADER)
    count = 0
    for row in rows:
        writer.writerow(
            [
                format_float(row.t, digits),
                format_float(row.avg_re, digits),
                format_float(row.avg_im, digits),
                format_float(row.avg_angle, digits),
                format_float(row.norm, digits),
            ]
        )
        count += 1
    return count


def time_series_csv(rows: Iterable[TimeSeriesRow], digits: int = FLOAT_DIGITS) -> str:
    buffer = io.StringIO()
    write_time_series(rows, buffer, digits)
    return buffer.getvalue()


def save_time_series(
    rows: Iterable[TimeSeriesRow], path: Path, digits: int = FLOAT_DIGITS
) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(time_series_csv(rows, digits))
