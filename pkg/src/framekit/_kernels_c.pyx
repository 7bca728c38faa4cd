# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled reduction kernels (Neumaier compensated summation).

Hot path of the Monte Carlo minimality harness: tens of thousands of
squared-distance reductions per run.  Accumulation order is fixed
(row-major element order), so results are deterministic regardless of
caller-side parallelism.
"""

from libc.math cimport fabs

import numpy as np


cdef inline void _acc(double x, double *s, double *c) noexcept nogil:
    cdef double t = s[0] + x
    if fabs(s[0]) >= fabs(x):
        c[0] += (s[0] - t) + x
    else:
        c[0] += (x - t) + s[0]
    s[0] = t


def comp_sum(const double[::1] x):
    """Compensated sum of a 1-D float64 array."""
    cdef double s = 0.0, c = 0.0
    cdef Py_ssize_t i
    with nogil:
        for i in range(x.shape[0]):
            _acc(x[i], &s, &c)
    return s + c


def sq_abs_sum(const double complex[::1] z):
    """Compensated sum of squared moduli of a 1-D complex128 array."""
    cdef double s = 0.0, c = 0.0
    cdef double re, im
    cdef Py_ssize_t i
    with nogil:
        for i in range(z.shape[0]):
            re = z[i].real
            im = z[i].imag
            _acc(re * re + im * im, &s, &c)
    return s + c


def sq_diff_sum(const double complex[::1] a, const double complex[::1] b):
    """Compensated sum of squared moduli of ``a - b``."""
    if a.shape[0] != b.shape[0]:
        raise ValueError("length mismatch")
    cdef double s = 0.0, c = 0.0
    cdef double re, im
    cdef Py_ssize_t i
    with nogil:
        for i in range(a.shape[0]):
            re = a[i].real - b[i].real
            im = a[i].imag - b[i].imag
            _acc(re * re + im * im, &s, &c)
    return s + c


def batch_sq_diff_sum(const double complex[:, ::1] stack, const double complex[::1] base):
    """Per-row ``sq_diff_sum(stack[t], base)`` for a 2-D complex128 stack."""
    if stack.shape[1] != base.shape[0]:
        raise ValueError("length mismatch")
    out = np.empty(stack.shape[0], dtype=np.float64)
    cdef double[::1] out_view = out
    cdef double s, c, re, im
    cdef Py_ssize_t t, i
    with nogil:
        for t in range(stack.shape[0]):
            s = 0.0
            c = 0.0
            for i in range(base.shape[0]):
                re = stack[t, i].real - base[i].real
                im = stack[t, i].imag - base[i].imag
                _acc(re * re + im * im, &s, &c)
            out_view[t] = s + c
    return out
