"""The frame data model: vector systems in C^m and their basic analysis.

A :class:`Frame` is an ordered, finite system of vectors f_1..f_n in C^m.
Zero vectors are allowed (several of the built-in families contain them).
The synthesis operator maps the i-th standard basis vector of C^n to f_i,
so its matrix carries the frame vectors as columns; the frame operator is
F F*, whose extreme nonzero eigenvalues give the frame bounds on the span.

Weak similarity of two systems with the same index set is decided by
kernel equality of their synthesis operators, which is how it enters
every statement this package verifies; the invertible map between the
spans is never constructed.
"""

import json
from dataclasses import dataclass

import numpy as np

from . import kernels
from .errors import BadShape, IndexMismatch, ParseError, ZeroFrame
from .linalg import DEFAULT_TOL, Tolerance, as_matrix, null_basis, svd


class Frame:
    """Ordered system of n vectors in C^m.

    ``vectors`` is an (n, m) array whose rows are the frame vectors; it is
    stored read-only.  ``ambient_dim``, when given, must match the vector
    length (it exists so callers can state the intended m explicitly).
    """

    __slots__ = ("_rows", "label")

    def __init__(self, vectors, ambient_dim: int | None = None, label: str = ""):
        rows = np.array(vectors, dtype=np.complex128, order="C", copy=True)
        if rows.ndim == 1:
            rows = rows.reshape(1, -1)
        if rows.ndim != 2:
            raise BadShape(f"vectors must form a 2-D array, got ndim={rows.ndim}")
        n, m = rows.shape
        if n < 1 or m < 1:
            raise BadShape(f"need at least one vector of length >= 1, got {rows.shape}")
        if ambient_dim is not None and ambient_dim != m:
            raise BadShape(f"ambient_dim={ambient_dim} but vectors have length {m}")
        if not (np.isfinite(rows.real).all() and np.isfinite(rows.imag).all()):
            raise ParseError("frame vectors must have finite entries")
        rows.flags.writeable = False
        self._rows = rows
        self.label = label

    @property
    def vectors(self) -> np.ndarray:
        """(n, m) array of frame vectors as rows (read-only)."""
        return self._rows

    @property
    def ambient_dim(self) -> int:
        return self._rows.shape[1]

    def __len__(self) -> int:
        return self._rows.shape[0]

    def __repr__(self) -> str:
        tag = f" {self.label!r}" if self.label else ""
        return f"<Frame{tag} n={len(self)} ambient_dim={self.ambient_dim}>"

    @classmethod
    def from_synthesis(cls, matrix, label: str = "") -> "Frame":
        """Build a frame from an m-by-n synthesis matrix (columns = vectors)."""
        return cls(np.asarray(matrix).T, label=label)


@dataclass(frozen=True)
class FrameBounds:
    """Frame constants 0 < lower <= upper, valid on the span of the system."""

    lower: float
    upper: float


@dataclass(frozen=True)
class FrameClass:
    """Classification flags plus rank/kernel bookkeeping (excess = kernel_dim)."""

    is_frame_of_span: bool
    is_tight: bool
    is_normalized_tight: bool
    kernel_dim: int
    rank: int


def synthesis_matrix(frame: Frame) -> np.ndarray:
    """m-by-n matrix sending the standard basis of C^n to the frame vectors."""
    return as_matrix(frame.vectors.T)


def frame_bounds(frame: Frame, tol: Tolerance = DEFAULT_TOL) -> FrameBounds:
    """Optimal frame constants on the span: extreme nonzero eigenvalues of FF*."""
    dec = svd(synthesis_matrix(frame), tol)
    if dec.rank == 0:
        raise ZeroFrame("all frame vectors are zero; frame bounds are undefined")
    return FrameBounds(lower=float(dec.singulars[-1] ** 2), upper=float(dec.singulars[0] ** 2))


def classify(frame: Frame, tol: Tolerance = DEFAULT_TOL) -> FrameClass:
    """Tightness flags and kernel dimension of the synthesis operator.

    A system is tight when the frame bounds coincide (relative to the
    upper bound) and normalized tight when additionally C = 1.  The
    all-zero system is reported as a non-frame rather than an error.
    """
    dec = svd(synthesis_matrix(frame), tol)
    n = len(frame)
    r = dec.rank
    if r == 0:
        return FrameClass(False, False, False, kernel_dim=n, rank=0)
    c = float(dec.singulars[-1] ** 2)
    d = float(dec.singulars[0] ** 2)
    tight = (d - c) <= tol.eq_abs_tol * d
    normalized = tight and abs(c - 1.0) <= tol.eq_abs_tol
    return FrameClass(True, tight, normalized, kernel_dim=n - r, rank=r)


def weakly_similar(a: Frame, b: Frame, tol: Tolerance = DEFAULT_TOL) -> bool:
    """Whether the synthesis operators of ``a`` and ``b`` share their kernel.

    For frames of their spans this is equivalent to weak similarity.  The
    subspace test is by mutual projection residuals of orthonormal kernel
    bases.
    """
    if len(a) != len(b):
        raise IndexMismatch(f"frames index {len(a)} and {len(b)} vectors")
    ka = null_basis(synthesis_matrix(a), tol)
    kb = null_basis(synthesis_matrix(b), tol)
    if ka.shape[1] != kb.shape[1]:
        return False
    if ka.shape[1] == 0:
        return True
    res_a = np.linalg.norm(ka - kb @ (kb.conj().T @ ka))
    res_b = np.linalg.norm(kb - ka @ (ka.conj().T @ kb))
    return bool(max(res_a, res_b) <= tol.eq_abs_tol * np.sqrt(ka.shape[1]))


def quadratic_distance(a: Frame, b: Frame) -> float:
    """Sum of squared norms of the vector differences, compensated."""
    if len(a) != len(b):
        raise IndexMismatch(f"frames index {len(a)} and {len(b)} vectors")
    if a.ambient_dim != b.ambient_dim:
        raise IndexMismatch(
            f"ambient dimensions differ: {a.ambient_dim} vs {b.ambient_dim}"
        )
    return kernels.sq_diff_sum(a.vectors, b.vectors)


def load_frame(path) -> Frame:
    """Read a frame from the JSON file format.

    The file is an object ``{"ambient_dim": m, "field": "real"|"complex",
    "vectors": [...]}`` where each vector is a row; a complex entry is a
    two-element [re, im] array and a real entry is a plain number.
    """
    try:
        with open(path, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise ParseError(f"cannot read frame file {path}: {exc}") from exc
    return frame_from_dict(doc)


def frame_from_dict(doc) -> Frame:
    """Build a Frame from the already-parsed file structure."""
    if not isinstance(doc, dict):
        raise ParseError("frame document must be a JSON object")
    try:
        m = int(doc["ambient_dim"])
        field = doc["field"]
        raw = doc["vectors"]
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"frame document missing/invalid key: {exc}") from exc
    if field not in ("real", "complex"):
        raise ParseError(f'field must be "real" or "complex", got {field!r}')
    if not isinstance(raw, list) or not raw:
        raise ParseError("vectors must be a non-empty list")
    rows = np.zeros((len(raw), m), dtype=np.complex128)
    for i, entry_row in enumerate(raw):
        if not isinstance(entry_row, list) or len(entry_row) != m:
            raise ParseError(f"vector {i}: expected {m} entries")
        for j, entry in enumerate(entry_row):
            rows[i, j] = _parse_entry(entry, field, i)
    return Frame(rows)


def _parse_entry(entry, field: str, row: int) -> complex:
    if field == "real":
        if isinstance(entry, bool) or not isinstance(entry, (int, float)):
            raise ParseError(f"vector {row}: real entries must be numbers")
        return complex(entry, 0.0)
    if (
        not isinstance(entry, list)
        or len(entry) != 2
        or any(isinstance(p, bool) or not isinstance(p, (int, float)) for p in entry)
    ):
        raise ParseError(f"vector {row}: complex entries must be [re, im] pairs")
    return complex(entry[0], entry[1])


def frame_to_dict(frame: Frame) -> dict:
    """Serialize a frame to the file structure (always complex entries)."""
    return {
        "ambient_dim": frame.ambient_dim,
        "field": "complex",
        "vectors": [
            [[float(z.real), float(z.imag)] for z in row] for row in frame.vectors
        ],
    }
