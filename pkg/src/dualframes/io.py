"""JSON documents for frames and matrices.

Complex entries are stored as [re, im] number pairs. Round-trips are
bit-exact for finite doubles because the serializer emits the shortest
decimal form that parses back to the same value.
"""

from __future__ import annotations

import json

import numpy as np

from .errors import DocumentError
from .frames import Frame
from .linalg import DEFAULT_TOL, Tolerance


def _complex_from_pair(value) -> complex:
    if (not isinstance(value, (list, tuple)) or len(value) != 2
            or any(isinstance(x, bool) or not isinstance(x, (int, float)) for x in value)):
        raise DocumentError(f"expected an [re, im] pair, got {value!r}")
    return complex(float(value[0]), float(value[1]))


def _pairs_from_matrix(arr: np.ndarray) -> list:
    return [[[float(z.real), float(z.imag)] for z in row] for row in np.asarray(arr)]


def _matrix_from_pairs(rows, *, what: str) -> np.ndarray:
    if not isinstance(rows, list) or not rows:
        raise DocumentError(f"{what} must be a nonempty list of rows")
    width = None
    data = []
    for row in rows:
        if not isinstance(row, list) or not row:
            raise DocumentError(f"{what} rows must be nonempty lists")
        if width is None:
            width = len(row)
        elif len(row) != width:
            raise DocumentError(f"{what} rows have inconsistent lengths")
        data.append([_complex_from_pair(p) for p in row])
    arr = np.array(data, dtype=np.complex128)
    if not np.all(np.isfinite(arr.real)) or not np.all(np.isfinite(arr.imag)):
        raise DocumentError(f"{what} contains non-finite entries")
    return arr


def frame_to_document(frame: Frame, metadata=None) -> dict:
    """Plain-dict form of a frame; vectors are rows of [re, im] pairs."""
    doc = {"dim": int(frame.dim), "vectors": _pairs_from_matrix(frame.vectors)}
    if metadata is not None:
        doc["metadata"] = dict(metadata)
    return doc


def frame_from_document(doc, *, tol: Tolerance = DEFAULT_TOL) -> Frame:
    """Parse a frame document; malformed input raises DocumentError."""
    if not isinstance(doc, dict):
        raise DocumentError("frame document must be a JSON object")
    if "dim" not in doc or "vectors" not in doc:
        raise DocumentError("frame document needs 'dim' and 'vectors'")
    dim = doc["dim"]
    if isinstance(dim, bool) or not isinstance(dim, int) or dim < 1:
        raise DocumentError(f"'dim' must be a positive integer, got {dim!r}")
    arr = _matrix_from_pairs(doc["vectors"], what="'vectors'")
    if arr.shape[1] != dim:
        raise DocumentError(
            f"vectors have length {arr.shape[1]}, document says dim {dim}")
    return Frame(arr, tol=tol)


def matrix_to_document(matrix) -> dict:
    arr = np.asarray(matrix, dtype=np.complex128)
    if arr.ndim != 2:
        raise DocumentError(f"expected a matrix, got ndim {arr.ndim}")
    return {"matrix": _pairs_from_matrix(arr)}


def matrix_from_document(doc) -> np.ndarray:
    if not isinstance(doc, dict) or "matrix" not in doc:
        raise DocumentError("matrix document needs a 'matrix' field")
    return _matrix_from_pairs(doc["matrix"], what="'matrix'")


def _load_json(path):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"{path}: invalid JSON: {exc}") from exc


def load_frame(path, *, tol: Tolerance = DEFAULT_TOL) -> Frame:
    return frame_from_document(_load_json(path), tol=tol)


def save_frame(frame: Frame, path, metadata=None) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(frame_to_document(frame, metadata), fh, indent=2)
        fh.write("\n")


def load_matrix(path) -> np.ndarray:
    return matrix_from_document(_load_json(path))


def save_matrix(matrix, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(matrix_to_document(matrix), fh, indent=2)
        fh.write("\n")
