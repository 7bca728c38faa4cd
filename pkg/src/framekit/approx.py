"""Polar decomposition and the symmetric constructions built on it.

Given the synthesis matrix F of a vector system, the thin SVD
F = U diag(s) V* yields the polar decomposition F = W |F| with

    W    = U V*        (partial isometry, zero on ker F),
    |F|  = V diag(s) V* (the PSD factor),
    P    = V V*        (projection onto the orthogonal complement of ker F).

The columns of W form the normalized tight frame closest to the input in
the summed squared vector distance, and that minimal distance has two
closed forms, ||P - |F|||_F^2 and ||I - |F|||_F^2 - dim ker F, both equal
to the sum of (1 - s_i)^2 over the nonzero singular values.  When the
input is linearly independent the same columns are its unique symmetric
(Loewdin) orthogonalization; with a kernel of dimension N an orthonormal
system at the same minimal distance exists iff the cokernel has dimension
at least N, realized by adding a partial isometry V that carries an
orthonormal kernel basis onto orthonormal directions outside ran F.
"""

from dataclasses import dataclass

import numpy as np

from .errors import (
    BadCokernel,
    IdentityMismatch,
    NoExtension,
    NotNormalizedTight,
    ZeroFrame,
)
from .frames import Frame, classify, quadratic_distance, synthesis_matrix
from .linalg import (
    DEFAULT_TOL,
    Tolerance,
    as_matrix,
    cokernel_basis,
    frobenius_norm,
    hermitian_eig,
    null_basis,
    svd,
)

# Direct distances and their closed forms are equal analytically; a gap
# beyond this means the rank cutoff misclassified a singular value.
_BREAKDOWN_TOL = 1e-6


@dataclass(frozen=True)
class PolarDecomposition:
    """Factors of F = W |F| plus the projection P onto (ker F)^perp."""

    W: np.ndarray
    absF: np.ndarray
    P: np.ndarray
    singulars: np.ndarray
    kernel_dim: int


@dataclass(frozen=True)
class ApproximationResult:
    """The closest normalized tight frame and its distance identities."""

    nu: Frame
    distance: float
    hs_P_minus_absF: float
    hs_I_minus_absF: float
    kernel_dim: int


@dataclass(frozen=True)
class OrthogonalizationResult:
    """Outcome of the symmetric orthogonalization problem.

    ``nu`` and ``V`` are populated only when a solution exists; ``unique``
    is true exactly when the synthesis operator is injective, in which
    case V = 0 and nu coincides with the symmetric approximation.
    """

    exists: bool
    unique: bool
    nu: Frame | None
    V: np.ndarray | None
    distance: float | None


def polar_decompose(f, tol: Tolerance = DEFAULT_TOL) -> PolarDecomposition:
    """Polar decomposition of an m-by-n matrix via its thin SVD."""
    f = as_matrix(f)
    dec = svd(f, tol)
    n = f.shape[1]
    vh = dec.V.conj().T
    w = dec.U @ vh
    absf = (dec.V * dec.singulars) @ vh
    absf = (absf + absf.conj().T) / 2.0
    p = dec.V @ vh
    p = (p + p.conj().T) / 2.0
    return PolarDecomposition(
        W=w,
        absF=absf,
        P=p,
        singulars=dec.singulars,
        kernel_dim=n - dec.rank,
    )


def approximation_distance_formulas(pd: PolarDecomposition) -> tuple[float, float]:
    """The two closed forms of the minimal distance.

    Returns ``(||I - |F|||_F^2 - N, ||P - |F|||_F^2)``; the values agree
    analytically, both equal to the sum of (1 - s_i)^2 over nonzero
    singular values.
    """
    n = pd.absF.shape[0]
    eye = np.eye(n, dtype=np.complex128)
    via_identity = frobenius_norm(eye - pd.absF) ** 2 - pd.kernel_dim
    via_projection = frobenius_norm(pd.P - pd.absF) ** 2
    return float(via_identity), float(via_projection)


def symmetric_approximation(frame: Frame, tol: Tolerance = DEFAULT_TOL) -> ApproximationResult:
    """The normalized tight frame {W(e_i)} minimizing the distance to ``frame``.

    The distance is computed directly as the summed squared vector
    difference and cross-checked against both closed forms; disagreement
    beyond 1e-6 raises IdentityMismatch because the identities are exact.
    """
    f = synthesis_matrix(frame)
    pd = polar_decompose(f, tol)
    if pd.singulars.size == 0:
        raise ZeroFrame("all frame vectors are zero; no symmetric approximation")
    nu = Frame.from_synthesis(pd.W, label=_derived_label(frame, "sym-approx"))
    distance = quadratic_distance(frame, nu)
    via_identity, via_projection = approximation_distance_formulas(pd)
    if abs(distance - via_identity) > _BREAKDOWN_TOL or abs(distance - via_projection) > _BREAKDOWN_TOL:
        raise IdentityMismatch(
            f"distance {distance!r} vs closed forms {via_identity!r} / {via_projection!r}"
        )
    if not classify(nu, tol).is_normalized_tight:
        raise IdentityMismatch("approximation failed to classify as normalized tight")
    eye = np.eye(f.shape[1], dtype=np.complex128)
    return ApproximationResult(
        nu=nu,
        distance=distance,
        hs_P_minus_absF=frobenius_norm(pd.P - pd.absF),
        hs_I_minus_absF=frobenius_norm(eye - pd.absF),
        kernel_dim=pd.kernel_dim,
    )


def hs_norm_via_tight_frame(t, tight: Frame, tol: Tolerance = DEFAULT_TOL) -> float:
    """Hilbert-Schmidt norm of ``t`` summed over a normalized tight frame.

    ``tight`` must be a normalized tight frame of the full domain C^k of
    ``t`` (k = number of columns); the result then equals the Frobenius
    norm of ``t`` no matter which admissible frame is used.
    """
    t = as_matrix(t)
    if tight.ambient_dim != t.shape[1]:
        raise NotNormalizedTight(
            f"tight frame lives in C^{tight.ambient_dim}, operator domain is C^{t.shape[1]}"
        )
    cls = classify(tight, tol)
    if not (cls.is_normalized_tight and cls.rank == tight.ambient_dim):
        raise NotNormalizedTight("frame is not normalized tight for the full domain")
    images = t @ synthesis_matrix(tight)
    return frobenius_norm(images)


def loewdin_orthogonalization(frame: Frame, tol: Tolerance = DEFAULT_TOL) -> OrthogonalizationResult:
    """Symmetric orthogonalization with the canonical cokernel choice.

    For an injective synthesis operator the result is unique and equals
    F (F*F)^{-1/2} applied to the standard basis; that closed form is
    cross-checked against the polar factor.  Otherwise the kernel is
    absorbed by extend_orthogonalization with the canonical choice.
    """
    f = synthesis_matrix(frame)
    pd = polar_decompose(f, tol)
    if pd.kernel_dim == 0:
        result = _extend(frame, f, pd, None, tol)
        gram = f.conj().T @ f
        eig = hermitian_eig(gram, tol)
        inv_root = (eig.eigenvectors / np.sqrt(eig.eigenvalues)) @ eig.eigenvectors.conj().T
        alt = f @ inv_root
        if float(np.abs(alt - pd.W).max()) > 1e-8:
            raise IdentityMismatch("polar factor disagrees with F (F*F)^{-1/2}")
        return result
    return _extend(frame, f, pd, "canonical", tol)


def extend_orthogonalization(
    frame: Frame, cokernel_cols="canonical", tol: Tolerance = DEFAULT_TOL
) -> OrthogonalizationResult:
    """Symmetric orthogonalization with an explicit (or canonical) extension.

    ``cokernel_cols`` selects where the kernel directions are sent: either
    the string "canonical" (first columns of the deterministic cokernel
    basis) or an m-by-N matrix of orthonormal columns orthogonal to
    ran F.  All symmetric orthogonalizations arise from such a choice.
    Raises NoExtension when the cokernel is too small to absorb the
    kernel (loewdin_orthogonalization reports that case as exists=False
    instead).
    """
    f = synthesis_matrix(frame)
    pd = polar_decompose(f, tol)
    result = _extend(frame, f, pd, cokernel_cols, tol)
    if not result.exists:
        m, n = f.shape
        r = n - pd.kernel_dim
        raise NoExtension(
            f"cokernel too small: dim((ran F)^perp) = {m - r} < {pd.kernel_dim} = dim(ker F)"
        )
    return result


def _derived_label(frame: Frame, suffix: str) -> str:
    return f"{frame.label}/{suffix}" if frame.label else suffix


def _extend(frame, f, pd, cokernel_cols, tol) -> OrthogonalizationResult:
    m, n = f.shape
    big_n = pd.kernel_dim
    r = n - big_n

    if big_n == 0:
        v = np.zeros((m, n), dtype=np.complex128)
        nu_matrix = pd.W
    else:
        if m - r < big_n:
            return OrthogonalizationResult(
                exists=False, unique=False, nu=None, V=None, distance=None
            )
        kernel = null_basis(f, tol)
        if isinstance(cokernel_cols, str) and cokernel_cols == "canonical":
            rho = cokernel_basis(f, tol)[:, :big_n]
        else:
            rho = as_matrix(cokernel_cols)
            if rho.shape != (m, big_n):
                raise BadCokernel(f"expected {big_n} columns of length {m}, got {rho.shape}")
            slack = tol.eq_abs_tol * np.sqrt(big_n)
            if np.linalg.norm(rho.conj().T @ rho - np.eye(big_n)) > slack:
                raise BadCokernel("cokernel columns are not orthonormal")
            if np.linalg.norm(pd.W.conj().T @ rho) > slack:
                raise BadCokernel("cokernel columns are not orthogonal to ran F")
        v = rho @ kernel.conj().T
        nu_matrix = v + pd.W

    nu = Frame.from_synthesis(nu_matrix, label=_derived_label(frame, "loewdin"))
    gram_residual = float(
        np.linalg.norm(nu_matrix.conj().T @ nu_matrix - np.eye(n, dtype=np.complex128))
    )
    if gram_residual > _BREAKDOWN_TOL:
        raise IdentityMismatch(f"orthonormality residual {gram_residual:.3e}")
    distance = quadratic_distance(frame, nu)
    eye = np.eye(n, dtype=np.complex128)
    closed = frobenius_norm(eye - pd.absF) ** 2
    if abs(distance - closed) > _BREAKDOWN_TOL:
        raise IdentityMismatch(f"distance {distance!r} vs ||I - |F|||^2 = {closed!r}")
    return OrthogonalizationResult(
        exists=True, unique=big_n == 0, nu=nu, V=v, distance=distance
    )
