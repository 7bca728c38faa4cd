"""Randomized verification of the minimality statements.

The harnesses probe the two inequalities at the heart of the package:
over all normalized tight frames weakly similar to the input, the
symmetric approximation minimizes the summed squared distance; over all
orthonormal systems (for n <= m), that distance is bounded below by
||I - |F|||_F^2.  Candidates are drawn uniformly: every normalized tight
frame with the prescribed kernel is R B* for an isometry R on the Stiefel
manifold, so Haar sampling of R covers the whole candidate set.

Trial t uses the child stream t of numpy's SeedSequence(seed), so reports
are deterministic for a fixed seed and independent of evaluation order
or chunking.
"""

from dataclasses import dataclass

import numpy as np

from . import kernels
from .approx import symmetric_approximation
from .errors import BadShape, IdentityMismatch, ZeroFrame
from .frames import Frame, quadratic_distance, synthesis_matrix
from .linalg import DEFAULT_TOL, Tolerance, frobenius_norm, haar_isometry, svd

_CHUNK = 256


@dataclass(frozen=True)
class MinimalityReport:
    """Outcome of a randomized minimality probe.

    ``violations`` counts candidates that beat the baseline by more than
    the violation tolerance; ``min_observed`` is the smallest candidate
    distance over all trials.
    """

    baseline: float
    trials: int
    min_observed: float
    violations: int
    seed: int


def random_weakly_similar_tight(frame: Frame, seed) -> Frame:
    """Haar-random normalized tight frame weakly similar to ``frame``.

    Returns {G(e_i)} for G = R B*, where B spans (ker F)^perp and R is a
    Haar isometry onto an r-dimensional subspace of the ambient space.
    """
    f = synthesis_matrix(frame)
    dec = svd(f)
    if dec.rank == 0:
        raise ZeroFrame("cannot draw candidates weakly similar to the zero system")
    r_iso = haar_isometry(frame.ambient_dim, dec.rank, seed)
    g = r_iso @ dec.V.conj().T
    return Frame.from_synthesis(g, label="random-tight")


def random_orthonormal_system(m: int, n: int, seed) -> Frame:
    """Haar-random system of n orthonormal vectors in C^m (needs n <= m)."""
    if n > m:
        raise BadShape(f"cannot fit {n} orthonormal vectors in C^{m}")
    return Frame.from_synthesis(haar_isometry(m, n, seed), label="random-orthonormal")


def _batched_haar(m: int, r: int, children) -> np.ndarray:
    """Stack of Haar isometries, one per child seed; shape (t, m, r)."""
    z = np.empty((len(children), m, r), dtype=np.complex128)
    for i, child in enumerate(children):
        rng = np.random.default_rng(child)
        z[i] = (rng.standard_normal((m, r)) + 1j * rng.standard_normal((m, r))) / np.sqrt(2.0)
    q, rr = np.linalg.qr(z)
    d = np.diagonal(rr, axis1=-2, axis2=-1)
    return q * (d / np.abs(d))[:, None, :]


def verify_tight_minimality(frame: Frame, trials: int, seed: int,
                            tol: Tolerance = DEFAULT_TOL) -> MinimalityReport:
    """Probe the tight-frame minimality inequality with random candidates.

    The baseline is the symmetric approximation distance.  Before the
    trials run, the optimum itself is injected as a candidate and must
    reproduce the baseline; a candidate beating the baseline by more than
    ``eq_abs_tol`` counts as a violation.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    result = symmetric_approximation(frame, tol)
    baseline = result.distance
    f = synthesis_matrix(frame)
    dec = svd(f, tol)
    b_star = dec.V.conj().T

    injected = quadratic_distance(frame, result.nu)
    if abs(injected - baseline) > 1e-10 * (1.0 + baseline):
        raise IdentityMismatch("injected optimum failed to reproduce the baseline")

    children = np.random.SeedSequence(seed).spawn(trials)
    base_flat = f.ravel()
    min_observed = np.inf
    violations = 0
    for start in range(0, trials, _CHUNK):
        batch = children[start : start + _CHUNK]
        r_stack = _batched_haar(frame.ambient_dim, dec.rank, batch)
        candidates = r_stack @ b_star
        dists = kernels.batch_sq_diff_sum(candidates, base_flat)
        min_observed = min(min_observed, float(dists.min()))
        violations += int(np.count_nonzero(dists < baseline - tol.eq_abs_tol))
    return MinimalityReport(
        baseline=baseline,
        trials=trials,
        min_observed=min_observed,
        violations=violations,
        seed=seed,
    )


def verify_orthonormal_minimality(frame: Frame, trials: int, seed: int,
                                  tol: Tolerance = DEFAULT_TOL) -> MinimalityReport:
    """Probe the orthonormal-system lower bound ``||I - |F|||_F^2``."""
    if trials < 1:
        raise ValueError("trials must be >= 1")
    m, n = frame.ambient_dim, len(frame)
    if n > m:
        raise BadShape(f"orthonormal candidates need n <= m, got n={n}, m={m}")
    f = synthesis_matrix(frame)
    dec = svd(f, tol)
    absf = (dec.V * dec.singulars) @ dec.V.conj().T
    baseline = frobenius_norm(np.eye(n, dtype=np.complex128) - absf) ** 2

    children = np.random.SeedSequence(seed).spawn(trials)
    base_flat = f.ravel()
    min_observed = np.inf
    violations = 0
    for start in range(0, trials, _CHUNK):
        batch = children[start : start + _CHUNK]
        candidates = _batched_haar(m, n, batch)
        dists = kernels.batch_sq_diff_sum(candidates, base_flat)
        min_observed = min(min_observed, float(dists.min()))
        violations += int(np.count_nonzero(dists < baseline - tol.eq_abs_tol))
    return MinimalityReport(
        baseline=float(baseline),
        trials=trials,
        min_observed=min_observed,
        violations=violations,
        seed=seed,
    )


def _doubling_coisometry(m: int) -> np.ndarray:
    """Fixed (m+1 -> m) coisometry: first basis direction split in two."""
    s = np.zeros((m, m + 1), dtype=np.complex128)
    s[0, 0] = 1.0 / np.sqrt(2.0)
    s[0, 1] = 1.0 / np.sqrt(2.0)
    for i in range(1, m):
        s[i, i + 1] = 1.0
    return s


def verify_lemma_frame_independence(t, pair_count: int, seed: int,
                                    tol: Tolerance = DEFAULT_TOL) -> bool:
    """Check that tight-frame sums reproduce the Frobenius norm of ``t``.

    Each pair combines a Haar-random orthonormal basis of the domain with
    a non-orthonormal normalized tight frame (a Haar unitary composed
    with a fixed doubling coisometry, so one direction is represented by
    two scaled copies).  Returns True when every sum agrees with the
    Frobenius norm to 1e-8.
    """
    if pair_count < 1:
        raise ValueError("pair_count must be >= 1")
    from .approx import hs_norm_via_tight_frame

    t = np.asarray(t, dtype=np.complex128)
    d = t.shape[1]
    reference = frobenius_norm(t)
    children = np.random.SeedSequence(seed).spawn(2 * pair_count)
    s = _doubling_coisometry(d)
    for k in range(pair_count):
        basis = Frame.from_synthesis(haar_isometry(d, d, children[2 * k]))
        padded = Frame.from_synthesis(haar_isometry(d, d, children[2 * k + 1]) @ s)
        for tight in (basis, padded):
            if abs(hs_norm_via_tight_frame(t, tight, tol) - reference) > 1e-8:
                return False
    return True
