import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from framekit import kernels
from framekit import _kernels_py as lane_py

try:
    from framekit import _kernels_c as lane_c
except ImportError:
    lane_c = None

needs_ext = pytest.mark.skipif(lane_c is None, reason="compiled kernels not built")

finite_floats = st.floats(
    min_value=-1e12, max_value=1e12, allow_nan=False, allow_infinity=False
)


@given(st.lists(finite_floats, min_size=0, max_size=200))
@settings(max_examples=200, deadline=None)
def test_comp_sum_matches_fsum(xs):
    arr = np.asarray(xs, dtype=np.float64)
    exact = math.fsum(xs)
    got = kernels.comp_sum(arr)
    assert abs(got - exact) <= 1e-12 * (1.0 + sum(abs(x) for x in xs))


def test_comp_sum_is_compensated():
    # naive left-to-right summation loses the small term entirely
    xs = np.array([1e16, 1.0, -1e16], dtype=np.float64)
    assert kernels.comp_sum(xs) == 1.0


def test_sq_abs_sum_simple():
    a = np.array([[3.0, 4.0]], dtype=np.complex128)
    assert kernels.sq_abs_sum(a) == 25.0
    b = np.array([1 + 1j, 2 - 2j])
    assert kernels.sq_abs_sum(b) == pytest.approx(2 + 8, abs=0)


def test_sq_diff_sum_symmetric_and_zero(rng):
    a = rng.standard_normal((7, 5)) + 1j * rng.standard_normal((7, 5))
    b = rng.standard_normal((7, 5)) + 1j * rng.standard_normal((7, 5))
    assert kernels.sq_diff_sum(a, a) == 0.0
    assert kernels.sq_diff_sum(a, b) == kernels.sq_diff_sum(b, a)
    with pytest.raises(ValueError):
        kernels.sq_diff_sum(a, b[:, :3])


def test_batch_matches_single(rng):
    stack = rng.standard_normal((9, 4, 6)) + 1j * rng.standard_normal((9, 4, 6))
    base = rng.standard_normal((4, 6)) + 1j * rng.standard_normal((4, 6))
    batch = kernels.batch_sq_diff_sum(stack, base)
    single = np.array([kernels.sq_diff_sum(stack[t], base) for t in range(9)])
    assert np.array_equal(batch, single)


@needs_ext
def test_lanes_agree(rng):
    flat = (rng.standard_normal(4800) + 1j * rng.standard_normal(4800)) * 10.0
    a = np.ascontiguousarray(flat)
    b = np.ascontiguousarray(flat[::-1])
    for fc, fp in (
        (lane_c.sq_abs_sum, lane_py.sq_abs_sum),
        (lambda x: lane_c.sq_diff_sum(x, b), lambda x: lane_py.sq_diff_sum(x, b)),
    ):
        vc, vp = fc(a), fp(a)
        assert vc == pytest.approx(vp, rel=1e-14)
    stack = np.ascontiguousarray(
        (rng.standard_normal((50, 240)) + 1j * rng.standard_normal((50, 240)))
    )
    base = np.ascontiguousarray(stack[0] * 0.5)
    np.testing.assert_allclose(
        lane_c.batch_sq_diff_sum(stack, base),
        lane_py.batch_sq_diff_sum(stack, base),
        rtol=1e-14,
    )


@needs_ext
def test_lane_selection_respects_environment():
    import os

    expected = "python" if os.environ.get("FRAMEKIT_PURE_PYTHON") == "1" else "cython"
    assert kernels.BACKEND == expected
