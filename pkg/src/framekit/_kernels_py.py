"""Pure-Python reduction kernels.

Fallback lane used when the compiled extension is unavailable (or when
``FRAMEKIT_PURE_PYTHON=1``).  Summation goes through :func:`math.fsum`,
which is exactly rounded, so this lane is at least as accurate as the
compensated compiled lane, just slower.  Inputs are normalized by
:mod:`framekit.kernels` before they reach these functions: contiguous
``float64`` / ``complex128`` arrays of the documented shapes.
"""

import math

import numpy as np


def comp_sum(x):
    """Sum of a 1-D float64 array with exact rounding."""
    return math.fsum(x.tolist())


def sq_abs_sum(z):
    """Sum of squared moduli of a 1-D complex128 array."""
    terms = np.square(z.real) + np.square(z.imag)
    return math.fsum(terms.tolist())


def sq_diff_sum(a, b):
    """Sum of squared moduli of ``a - b`` for 1-D complex128 arrays."""
    d = a - b
    terms = np.square(d.real) + np.square(d.imag)
    return math.fsum(terms.tolist())


def batch_sq_diff_sum(stack, base):
    """Per-row ``sq_diff_sum(stack[t], base)`` for a 2-D complex128 stack."""
    out = np.empty(stack.shape[0], dtype=np.float64)
    for t in range(stack.shape[0]):
        out[t] = sq_diff_sum(stack[t], base)
    return out
