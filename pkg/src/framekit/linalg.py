"""Dense complex linear-algebra primitives.

Everything downstream works over C^m with double-precision complex
matrices.  Decompositions are delegated to LAPACK through numpy (any
backward-stable method is acceptable here); what this module adds is the
rank policy, deterministic phase fixing, orthonormal kernel/cokernel
bases, PSD square roots, compensated Frobenius norms, and seeded
Haar-distributed isometries.

Phase convention: for any computed orthonormal column, the entry of
largest modulus is rotated to be real and positive (first index wins
ties).  For an SVD the phase is taken from the left vector and the same
rotation is applied to the right vector, which keeps U diag(s) V* equal
to the input.
"""

from dataclasses import dataclass

import numpy as np

from . import kernels
from .errors import BadShape, NoConvergence, NotHermitian, NotPsd


@dataclass(frozen=True)
class Tolerance:
    """Numerical policy: relative rank cutoff and absolute comparison slack."""

    rank_rel_tol: float = 1e-10
    eq_abs_tol: float = 1e-9

    def __post_init__(self):
        for name in ("rank_rel_tol", "eq_abs_tol"):
            v = getattr(self, name)
            if not (0.0 < v < 1.0):
                raise ValueError(f"{name} must lie strictly between 0 and 1, got {v}")


DEFAULT_TOL = Tolerance()


def as_matrix(a) -> np.ndarray:
    """Coerce ``a`` to a read-only 2-D complex128 matrix, validating entries.

    Raises BadShape for empty or non-2-D input and ValueError for
    non-finite entries.
    """
    arr = np.array(a, dtype=np.complex128, order="C", copy=True)
    if arr.ndim != 2:
        raise BadShape(f"expected a 2-D matrix, got ndim={arr.ndim}")
    if arr.shape[0] < 1 or arr.shape[1] < 1:
        raise BadShape(f"matrix must have at least one row and column, got {arr.shape}")
    if not (np.isfinite(arr.real).all() and np.isfinite(arr.imag).all()):
        raise ValueError("matrix entries must be finite")
    arr.flags.writeable = False
    return arr


@dataclass(frozen=True)
class HermitianEig:
    """Eigenvalues (real, ascending) and orthonormal eigenvector columns."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray


@dataclass(frozen=True)
class Svd:
    """Thin SVD truncated at the rank cutoff.

    U is m-by-r and V is n-by-r with orthonormal columns; ``singulars``
    is positive and descending with length r (0 for the zero matrix).
    """

    U: np.ndarray
    singulars: np.ndarray
    V: np.ndarray

    @property
    def rank(self) -> int:
        return len(self.singulars)


def _fix_column_phases(mat: np.ndarray, companion: np.ndarray | None = None):
    """Rotate each column so its largest-modulus entry is real positive.

    When ``companion`` is given, its columns receive the same rotations
    (used to keep SVD factor pairs consistent).  Zero columns are left
    untouched.  Returns new arrays.
    """
    mat = np.array(mat, dtype=np.complex128)
    comp = None if companion is None else np.array(companion, dtype=np.complex128)
    for j in range(mat.shape[1]):
        col = mat[:, j]
        k = int(np.argmax(np.abs(col)))
        pivot = col[k]
        if pivot == 0:
            continue
        phase = np.conj(pivot) / abs(pivot)
        mat[:, j] *= phase
        # kill the residual imaginary part of the pivot introduced by rounding
        mat[k, j] = mat[k, j].real
        if comp is not None:
            comp[:, j] *= phase
    if companion is None:
        return mat
    return mat, comp


def frobenius_norm(a) -> float:
    """Frobenius (= Hilbert-Schmidt) norm with compensated summation."""
    return float(np.sqrt(kernels.sq_abs_sum(np.asarray(a, dtype=np.complex128))))


def hermitian_eig(a, tol: Tolerance = DEFAULT_TOL) -> HermitianEig:
    """Eigendecomposition of a Hermitian matrix, eigenvalues ascending.

    Raises NotHermitian when ``a`` fails the symmetry check and
    NoConvergence when the LAPACK iteration gives up.
    """
    a = as_matrix(a)
    if a.shape[0] != a.shape[1]:
        raise BadShape(f"hermitian_eig needs a square matrix, got {a.shape}")
    scale = frobenius_norm(a)
    if frobenius_norm(a - a.conj().T) > tol.eq_abs_tol * (1.0 + scale):
        raise NotHermitian("matrix is not Hermitian within tolerance")
    try:
        vals, vecs = np.linalg.eigh(a)
    except np.linalg.LinAlgError as exc:
        raise NoConvergence(str(exc)) from exc
    return HermitianEig(eigenvalues=vals, eigenvectors=_fix_column_phases(vecs))


def numerical_rank(singulars, tol: Tolerance = DEFAULT_TOL) -> int:
    """Count of singular values above ``rank_rel_tol`` times the largest."""
    s = np.asarray(singulars, dtype=np.float64)
    if s.size == 0:
        return 0
    if np.any(s < 0) or np.any(np.diff(s) > 0):
        raise ValueError("singular values must be nonnegative and descending")
    if s[0] == 0.0:
        return 0
    return int(np.count_nonzero(s > tol.rank_rel_tol * s[0]))


def svd(a, tol: Tolerance = DEFAULT_TOL) -> Svd:
    """Thin SVD keeping only singular values above the rank cutoff."""
    a = as_matrix(a)
    try:
        u, s, vh = np.linalg.svd(a, full_matrices=False)
    except np.linalg.LinAlgError as exc:
        raise NoConvergence(str(exc)) from exc
    r = numerical_rank(s, tol)
    u, v = _fix_column_phases(u[:, :r], vh[:r].conj().T)
    return Svd(U=u, singulars=s[:r].copy(), V=v)


def _full_svd(a):
    a = as_matrix(a)
    try:
        return np.linalg.svd(a, full_matrices=True)
    except np.linalg.LinAlgError as exc:
        raise NoConvergence(str(exc)) from exc


def null_basis(a, tol: Tolerance = DEFAULT_TOL) -> np.ndarray:
    """Orthonormal columns spanning ker(a); shape n-by-(n - rank)."""
    a = as_matrix(a)
    _, s, vh = _full_svd(a)
    r = numerical_rank(s, tol)
    return _fix_column_phases(vh[r:].conj().T)


def cokernel_basis(a, tol: Tolerance = DEFAULT_TOL) -> np.ndarray:
    """Orthonormal columns spanning (ran a)^perp; shape m-by-(m - rank)."""
    a = as_matrix(a)
    u, s, _ = _full_svd(a)
    r = numerical_rank(s, tol)
    return _fix_column_phases(u[:, r:])


def psd_sqrt(a, tol: Tolerance = DEFAULT_TOL) -> np.ndarray:
    """Principal square root of a Hermitian PSD matrix.

    Eigenvalues slightly below zero are clamped; an eigenvalue below
    ``-sqrt(eq_abs_tol) * ||a||`` raises NotPsd.
    """
    eig = hermitian_eig(a, tol)
    scale = frobenius_norm(a)
    floor = -np.sqrt(tol.eq_abs_tol) * max(scale, 1.0)
    if np.any(eig.eigenvalues < floor):
        raise NotPsd(f"eigenvalue {eig.eigenvalues.min():.3e} below {floor:.3e}")
    vals = np.clip(eig.eigenvalues, 0.0, None)
    v = eig.eigenvectors
    root = (v * np.sqrt(vals)) @ v.conj().T
    return (root + root.conj().T) / 2.0


def haar_isometry(m: int, r: int, seed) -> np.ndarray:
    """Haar-distributed m-by-r matrix with orthonormal columns.

    ``seed`` may be an int, a SeedSequence, or a Generator; results are
    deterministic for a fixed seed.  Sampling is QR of an i.i.d. complex
    Gaussian with the R-diagonal phase correction that makes the
    distribution exactly Haar.
    """
    if r > m:
        raise BadShape(f"isometry needs r <= m, got m={m}, r={r}")
    rng = seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)
    z = (rng.standard_normal((m, r)) + 1j * rng.standard_normal((m, r))) / np.sqrt(2.0)
    q, rr = np.linalg.qr(z)
    d = np.diagonal(rr)
    return q * (d / np.abs(d))
