"""Plain-text matrix files.

A matrix file is a JSON object::

    {"modulus": 6, "kind": "const", "rows": 2, "cols": 2, "entries": [[1, 0], [0, 1]]}

For ``"kind": "poly"`` every entry is an ascending coefficient list, e.g.
``[3, 1]`` for z + 3.  Entries are reduced mod the modulus on load.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any, Union

from .poly import PolyMatrix
from .ring import RMatrix, make_ring

Matrix = Union[RMatrix, PolyMatrix]


class MatrixFileError(ValueError):
    """Malformed matrix document (a usage error, not a domain error)."""


def to_document(A: Matrix) -> dict[str, Any]:
    if isinstance(A, PolyMatrix):
        kind, entries = "poly", A.to_coeffs()
    else:
        kind, entries = "const", A.tolist()
    return {"modulus": A.ring.modulus, "kind": kind, "rows": A.shape[0], "cols": A.shape[1],
            "entries": entries}


def from_document(doc: dict[str, Any]) -> Matrix:
    try:
        m, kind, rows, cols, entries = (doc["modulus"], doc["kind"], doc["rows"], doc["cols"],
                                        doc["entries"])
    except (KeyError, TypeError) as exc:
        raise MatrixFileError(f"missing field {exc}") from None
    if kind not in ("const", "poly"):
        raise MatrixFileError(f"kind must be 'const' or 'poly', got {kind!r}")
    if len(entries) != rows or any(len(r) != cols for r in entries):
        raise MatrixFileError(f"entries do not match the declared shape {rows}x{cols}")
    ring = make_ring(int(m))
    if kind == "const":
        if any(not isinstance(x, int) for r in entries for x in r):
            raise MatrixFileError("const entries must be integers")
        return RMatrix.from_rows(ring, entries, cols)
    if any(not isinstance(x, list) or not all(isinstance(c, int) for c in x)
           for r in entries for x in r):
        raise MatrixFileError("poly entries must be coefficient lists")
    return PolyMatrix.from_coeffs(ring, entries, cols)


def dumps(A: Matrix) -> str:
    return json.dumps(to_document(A), sort_keys=True) + "\n"


def loads(text: str) -> Matrix:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MatrixFileError(f"not valid JSON: {exc}") from None
    return from_document(doc)


def load(path: str | Path) -> Matrix:
    return loads(Path(path).read_text(encoding="utf-8"))


def save(path: str | Path, A: Matrix) -> None:
    Path(path).write_text(dumps(A), encoding="utf-8")
