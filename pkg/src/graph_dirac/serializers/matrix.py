"""Matrix documents: JSON arrays of rows, complex entries as [re, im] pairs."""

import json
import logging
import math
from typing import Any

import numpy as np
from pydantic import TypeAdapter, ValidationError

from ..exceptions import GraphDocumentError

logger = logging.getLogger(__name__)

FLOAT_DIGITS = 17

Entry = int | float | tuple[float, float]
_ROWS_ADAPTER: TypeAdapter[list[list[Entry]]] = TypeAdapter(list[list[Entry]])


def format_float(value: float, digits: int = FLOAT_DIGITS) -> str:
    """``value`` to ``digits`` significant digits; negative zero prints as 0."""
    if value == 0:
        return "0"
    return f"{value:.{digits}g}"


def matrix_rows(m: np.ndarray) -> list[list[Any]]:
    """Plain nested lists: ints stay exact, complex becomes [re, im]."""
    m = np.asarray(m)
    if np.iscomplexobj(m):
        return [[[float(z.real), float(z.imag)] for z in row] for row in m]
    if np.issubdtype(m.dtype, np.integer) or m.dtype == object:
        return [[int(x) for x in row] for row in m]
    return [[float(x) for x in row] for row in m]


def encode_matrix(m: np.ndarray) -> str:
    """Compact JSON; floats use their shortest exact representation."""
    return json.dumps(matrix_rows(m), separators=(",", ":"))


def decode_matrix(text: str | bytes) -> np.ndarray:
    """Inverse of ``encode_matrix``.

    Raises:
        GraphDocumentError: If the text is not a rectangular array of rows
    """
    try:
        rows = _ROWS_ADAPTER.validate_json(text)
    except ValidationError as e:
        raise GraphDocumentError(
            "invalid matrix document", errors=[err["msg"] for err in e.errors()]
        ) from e

    widths = {len(row) for row in rows}
    if len(widths) > 1:
        raise GraphDocumentError(f"matrix rows differ in length: {sorted(widths)}")
    width = widths.pop() if widths else 0

    entries = [entry for row in rows for entry in row]
    if any(isinstance(entry, tuple) for entry in entries):
        values = [complex(*e) if isinstance(e, tuple) else complex(e) for e in entries]
        return np.array(values, dtype=np.complex128).reshape(len(rows), width)
    if all(isinstance(entry, int) for entry in entries):
        return np.array(entries, dtype=np.int64).reshape(len(rows), width)
    return np.array(entries, dtype=np.float64).reshape(len(rows), width)


def _render_entry(entry: Any, digits: int) -> str:
    if isinstance(entry, list):
        return f"[{format_float(entry[0], digits)},{format_float(entry[1], digits)}]"
    if isinstance(entry, float):
        if math.isfinite(entry) and entry == int(entry) and abs(entry) < 2**53:
            return str(int(entry))
        return format_float(entry, digits)
    return str(entry)


def render_matrix(m: np.ndarray, digits: int = FLOAT_DIGITS) -> str:
    """Human-readable form such as ``[[2,1],[1,2]]``."""
    rows = matrix_rows(m)
    return "[" + ",".join(
        "[" + ",".join(_render_entry(entry, digits) for entry in row) + "]" for row in rows
    ) + "]"


def format_complex(value: complex, digits: int = FLOAT_DIGITS) -> str:
    """``re+imj`` with both parts to ``digits`` significant digits."""
    sign = "-" if value.imag < 0 else "+"
    return f"{format_float(value.real, digits)}{sign}{format_float(abs(value.imag), digits)}j"
