"""Reduction kernels with import-time backend selection.

Two interchangeable lanes implement the compensated-summation reductions
that dominate the verification harnesses:

* ``framekit._kernels_c`` -- Cython extension, Neumaier compensated sums;
* ``framekit._kernels_py`` -- pure Python on :func:`math.fsum`.

The compiled lane is picked automatically when importable; setting
``FRAMEKIT_PURE_PYTHON=1`` forces the fallback.  ``BACKEND`` names the
active lane.  Both lanes fix the same (row-major) accumulation order, so
each is deterministic run to run; they may differ from each other in the
last ulp.

Public wrappers normalize dtype/contiguity so the lanes can assume
contiguous ``float64`` / ``complex128`` buffers.
"""

import os

if os.environ.get("FRAMEKIT_PURE_PYTHON", "") == "1":
    from . import _kernels_py as _impl

    BACKEND = "python"
else:
    try:
        from . import _kernels_c as _impl  # type: ignore[no-redef]

        BACKEND = "cython"
    except ImportError:
        from . import _kernels_py as _impl  # type: ignore[no-redef]

        BACKEND = "python"

import numpy as np


def _as_c128(a):
    return np.ascontiguousarray(a, dtype=np.complex128).ravel()


def comp_sum(x) -> float:
    """Compensated sum of the (flattened) real array ``x``."""
    x = np.ascontiguousarray(x, dtype=np.float64).ravel()
    return float(_impl.comp_sum(x))


def sq_abs_sum(a) -> float:
    """Compensated sum of squared moduli over all entries of ``a``."""
    return float(_impl.sq_abs_sum(_as_c128(a)))


def sq_diff_sum(a, b) -> float:
    """Compensated sum of squared moduli of ``a - b`` (flattened)."""
    a = _as_c128(a)
    b = _as_c128(b)
    if a.shape[0] != b.shape[0]:
        raise ValueError("sq_diff_sum: operands have different sizes")
    return float(_impl.sq_diff_sum(a, b))


def batch_sq_diff_sum(stack, base) -> np.ndarray:
    """Per-slice squared distance ``sum |stack[t] - base|^2``.

    ``stack`` has one leading batch axis; each slice is compared against
    ``base``.  Returns a float64 vector of length ``stack.shape[0]``.
    """
    stack = np.ascontiguousarray(stack, dtype=np.complex128)
    t = stack.shape[0]
    flat = stack.reshape(t, -1)
    base = _as_c128(base)
    if flat.shape[1] != base.shape[0]:
        raise ValueError("batch_sq_diff_sum: slice size does not match base")
    return np.asarray(_impl.batch_sq_diff_sum(flat, base), dtype=np.float64)
