"""Symmetric approximation of frames and Loewdin orthogonalization.

Compute the normalized tight frame closest (in summed squared vector
distance) to a given vector system via the polar decomposition of its
synthesis operator, the symmetric orthogonalization when one exists, and
verify the minimality properties empirically.
"""

from . import errors
from .approx import (
    ApproximationResult,
    OrthogonalizationResult,
    PolarDecomposition,
    approximation_distance_formulas,
    extend_orthogonalization,
    hs_norm_via_tight_frame,
    loewdin_orthogonalization,
    polar_decompose,
    symmetric_approximation,
)
from .families import (
    FAMILY_KINDS,
    FamilySpec,
    TruncationDiagnostics,
    diagnostics,
    kernel_witness_check,
    truncate,
    unboundedness_probe,
)
from .frames import (
    Frame,
    FrameBounds,
    FrameClass,
    classify,
    frame_bounds,
    frame_from_dict,
    frame_to_dict,
    load_frame,
    quadratic_distance,
    synthesis_matrix,
    weakly_similar,
)
from .kernels import BACKEND
from .linalg import (
    DEFAULT_TOL,
    HermitianEig,
    Svd,
    Tolerance,
    cokernel_basis,
    frobenius_norm,
    haar_isometry,
    hermitian_eig,
    null_basis,
    numerical_rank,
    psd_sqrt,
    svd,
)
from .verify import (
    MinimalityReport,
    random_orthonormal_system,
    random_weakly_similar_tight,
    verify_lemma_frame_independence,
    verify_orthonormal_minimality,
    verify_tight_minimality,
)

__version__ = "0.1.0"

__all__ = [
    "ApproximationResult",
    "BACKEND",
    "DEFAULT_TOL",
    "FAMILY_KINDS",
    "FamilySpec",
    "Frame",
    "FrameBounds",
    "FrameClass",
    "HermitianEig",
    "MinimalityReport",
    "OrthogonalizationResult",
    "PolarDecomposition",
    "Svd",
    "Tolerance",
    "TruncationDiagnostics",
    "approximation_distance_formulas",
    "classify",
    "cokernel_basis",
    "diagnostics",
    "errors",
    "extend_orthogonalization",
    "frame_bounds",
    "frame_from_dict",
    "frame_to_dict",
    "frobenius_norm",
    "haar_isometry",
    "hermitian_eig",
    "hs_norm_via_tight_frame",
    "kernel_witness_check",
    "load_frame",
    "loewdin_orthogonalization",
    "null_basis",
    "numerical_rank",
    "polar_decompose",
    "psd_sqrt",
    "quadratic_distance",
    "random_orthonormal_system",
    "random_weakly_similar_tight",
    "svd",
    "symmetric_approximation",
    "synthesis_matrix",
    "truncate",
    "unboundedness_probe",
    "verify_lemma_frame_independence",
    "verify_orthonormal_minimality",
    "verify_tight_minimality",
    "weakly_similar",
]
