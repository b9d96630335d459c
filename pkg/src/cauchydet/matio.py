"""Matrix file I/O: a strict JSON schema with canonical fraction strings.

Layout:

    {"rows": R, "cols": C, "entries": [["p/q", ...], ...]}

``entries`` is row-major, R lists of C strings, each in canonical form
("p/q" lowest terms with q >= 2, or "p" for integers).  Non-canonical
input ("2/4", "3/1", "0/5", "-0", leading zeros, whitespace) is rejected
rather than normalized so files round-trip bit-exactly and golden files
stay diff-able.  Schema violations raise :class:`MatrixFormatError`.
"""

from __future__ import annotations

import json

from .matrix import Matrix
from .rational import format_fraction, parse_fraction

__all__ = ["MatrixFormatError", "load_matrix", "save_matrix", "loads_matrix", "dumps_matrix"]

_KEYS = {"rows", "cols", "entries"}


class MatrixFormatError(ValueError):
    """The file or text does not satisfy the matrix schema."""


def loads_matrix(text: str) -> Matrix:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MatrixFormatError(f"not valid JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise MatrixFormatError(f"top level must be an object, got {type(doc).__name__}")
    if set(doc) != _KEYS:
        raise MatrixFormatError(
            f"object must have exactly the keys rows, cols, entries; got {sorted(doc)}"
        )
    rows, cols, entries = doc["rows"], doc["cols"], doc["entries"]
    for name, value in (("rows", rows), ("cols", cols)):
        if not isinstance(value, int) or isinstance(value, bool) or value < 1:
            raise MatrixFormatError(f"{name} must be a positive integer, got {value!r}")
    if not isinstance(entries, list) or len(entries) != rows:
        raise MatrixFormatError(
            f"entries must be a list of {rows} rows, got "
            f"{len(entries) if isinstance(entries, list) else type(entries).__name__}"
        )
    parsed = []
    for i, row in enumerate(entries):
        if not isinstance(row, list) or len(row) != cols:
            raise MatrixFormatError(f"row {i} must be a list of {cols} entries")
        out = []
        for j, cell in enumerate(row):
            if not isinstance(cell, str):
                raise MatrixFormatError(f"entry ({i}, {j}) must be a string, got {cell!r}")
            try:
                out.append(parse_fraction(cell))
            except ValueError as exc:
                raise MatrixFormatError(f"entry ({i}, {j}): {exc}") from None
        parsed.append(out)
    return Matrix(parsed)


def dumps_matrix(m: Matrix) -> str:
    if m.rows < 1 or m.cols < 1:
        raise MatrixFormatError(f"cannot serialize an empty {m.rows}x{m.cols} matrix")
    doc = {
        "rows": m.rows,
        "cols": m.cols,
        "entries": [[format_fraction(v) for v in m.row(i)] for i in range(m.rows)],
    }
    return json.dumps(doc, indent=2) + "\n"


def load_matrix(path) -> Matrix:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise MatrixFormatError(f"cannot read {path}: {exc}") from None
    return loads_matrix(text)


def save_matrix(m: Matrix, path) -> None:
    text = dumps_matrix(m)
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)
