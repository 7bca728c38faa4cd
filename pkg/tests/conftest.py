import numpy as np
import pytest

from framekit import Frame


def random_frame(rng, m, n, deficient=False, scale=None):
    """Random frame with O(1) singular values; optionally rank-deficient.

    Deficient frames are products of two thin Gaussian factors, so the
    rank is min-dimension-minus-a-gap rather than full.
    """
    if scale is None:
        scale = 1.0 / np.sqrt(m)
    if deficient and min(m, n) >= 2:
        k = max(1, min(m, n) - 1 - int(rng.integers(0, min(m, n) - 1)))
        a = rng.standard_normal((m, k)) + 1j * rng.standard_normal((m, k))
        b = rng.standard_normal((k, n)) + 1j * rng.standard_normal((k, n))
        mat = (a @ b) * (scale / np.sqrt(k))
    else:
        mat = (rng.standard_normal((m, n)) + 1j * rng.standard_normal((m, n))) * scale
    return Frame.from_synthesis(mat)


def random_hermitian(rng, n):
    a = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    return (a + a.conj().T) / 2.0


@pytest.fixture
def rng():
    return np.random.default_rng(20240817)
