"""Parameterized families of vector systems with finite truncation.

Five families, each defined over the standard basis e_1..e_n of C^n:

* ``shift-weighted``: f_1 = 0 and f_i = a_{i-1} e_{i-1} -- a weighted
  backward shift whose weights decide whether I - |F| stays summable as n
  grows (constant weight 1 keeps the norm at 1; any other constant makes
  it diverge).
* ``even-odd``: f_i = e_i for even i and 0 for odd i; a normalized tight
  frame of its span that is its own symmetric approximation at every
  size.
* ``sum-spike``: f_1 = e_1, f_i = e_1 + e_i; the first coordinate
  accumulates mass, so the truncated operator norms grow without bound.
* ``difference-chain``: f_1 = e_1, f_i = e_i - i/(i-1) e_{i-1}; bounded
  by 3 in operator norm with an explicit near-kernel element at every
  truncation.
* ``geometric-kernel``: unit vectors with geometrically decaying overlap
  against e_1; ||I - F*F||_F increases to sqrt(2) while the truncations
  stay injective, with a kernel witness whose residual decays
  geometrically.

Truncation is plain: index set {1..n} in ambient C^n with no tail
compensation.  Every family is banded or column-local, so truncation is
exact for difference-chain and geometrically convergent otherwise.
"""

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import BadSize, WrongFamily
from .frames import Frame, frame_bounds, synthesis_matrix
from .linalg import DEFAULT_TOL, Tolerance, frobenius_norm
from .approx import polar_decompose

SHIFT_WEIGHTED = "shift-weighted"
EVEN_ODD = "even-odd"
SUM_SPIKE = "sum-spike"
DIFFERENCE_CHAIN = "difference-chain"
GEOMETRIC_KERNEL = "geometric-kernel"

FAMILY_KINDS = (SHIFT_WEIGHTED, EVEN_ODD, SUM_SPIKE, DIFFERENCE_CHAIN, GEOMETRIC_KERNEL)


@dataclass(frozen=True)
class FamilySpec:
    """Family selector plus the shift weights when applicable.

    ``alpha`` is only meaningful for the shift-weighted family: a nonzero
    constant or an explicit sequence of weights (index i supplies the
    weight of f_{i+1}).
    """

    kind: str
    alpha: complex | Sequence[complex] | None = None

    def __post_init__(self):
        if self.kind not in FAMILY_KINDS:
            raise WrongFamily(f"unknown family {self.kind!r}; choose from {FAMILY_KINDS}")
        if self.kind == SHIFT_WEIGHTED:
            if self.alpha is None:
                raise WrongFamily("shift-weighted needs alpha (constant or sequence)")
            if np.isscalar(self.alpha) and not (0 < abs(complex(self.alpha)) < np.inf):
                raise WrongFamily("constant alpha must be nonzero and finite")
        elif self.alpha is not None:
            raise WrongFamily(f"family {self.kind!r} takes no alpha parameter")


@dataclass(frozen=True)
class TruncationDiagnostics:
    """Size-n snapshot of the quantities tracked across truncations.

    ``hs_I_minus_gram`` is ||I - F*F||_F, the quantity with the known
    sqrt(2) limit for the geometric-kernel family.
    """

    size: int
    hs_I_minus_absF: float
    hs_P_minus_absF: float
    hs_I_minus_gram: float
    operator_norm: float
    kernel_dim: int
    lower_bound: float


def _alpha_at(spec: FamilySpec, i: int, n: int) -> complex:
    """Weight a_i (1-based) for the shift-weighted family."""
    if np.isscalar(spec.alpha):
        return complex(spec.alpha)
    seq = spec.alpha
    if len(seq) < n - 1:
        raise BadSize(f"alpha sequence has {len(seq)} entries; need {n - 1} for size {n}")
    return complex(seq[i - 1])


def truncate(spec: FamilySpec, n: int) -> Frame:
    """The size-n truncation of the family, as a frame in C^n."""
    min_n = 3 if spec.kind == DIFFERENCE_CHAIN else 2
    if n < min_n:
        raise BadSize(f"{spec.kind} needs size >= {min_n}, got {n}")
    rows = np.zeros((n, n), dtype=np.complex128)
    if spec.kind == SHIFT_WEIGHTED:
        for i in range(2, n + 1):
            rows[i - 1, i - 2] = _alpha_at(spec, i - 1, n)
    elif spec.kind == EVEN_ODD:
        for i in range(2, n + 1, 2):
            rows[i - 1, i - 1] = 1.0
    elif spec.kind == SUM_SPIKE:
        rows[0, 0] = 1.0
        for i in range(2, n + 1):
            rows[i - 1, 0] = 1.0
            rows[i - 1, i - 1] = 1.0
    elif spec.kind == DIFFERENCE_CHAIN:
        rows[0, 0] = 1.0
        for i in range(2, n + 1):
            rows[i - 1, i - 1] = 1.0
            rows[i - 1, i - 2] = -i / (i - 1)
    else:  # geometric-kernel
        rows[0, 0] = 1.0
        inv_rt2 = 1.0 / np.sqrt(2.0)
        rows[1, 0] = inv_rt2
        rows[1, 1] = inv_rt2
        for k in range(3, n + 1):
            rows[k - 1, 0] = inv_rt2 ** (k - 1)
            for j in range(2, k):
                rows[k - 1, j - 1] = -(inv_rt2 ** (k - j + 1))
            rows[k - 1, k - 1] = inv_rt2
    return Frame(rows, label=f"{spec.kind}[{n}]")


def diagnostics(
    spec: FamilySpec, sizes: Sequence[int], tol: Tolerance = DEFAULT_TOL
) -> list[TruncationDiagnostics]:
    """Per-size truncation diagnostics (sizes must be ascending)."""
    sizes = list(sizes)
    if any(b <= a for a, b in zip(sizes, sizes[1:])):
        raise BadSize("sizes must be strictly ascending")
    out = []
    for n in sizes:
        frame = truncate(spec, n)
        f = synthesis_matrix(frame)
        pd = polar_decompose(f, tol)
        eye = np.eye(n, dtype=np.complex128)
        gram = f.conj().T @ f
        out.append(
            TruncationDiagnostics(
                size=n,
                hs_I_minus_absF=frobenius_norm(eye - pd.absF),
                hs_P_minus_absF=frobenius_norm(pd.P - pd.absF),
                hs_I_minus_gram=frobenius_norm(eye - gram),
                operator_norm=float(pd.singulars[0]) if pd.singulars.size else 0.0,
                kernel_dim=pd.kernel_dim,
                lower_bound=float(frame_bounds(frame, tol).lower),
            )
        )
    return out


def kernel_witness_check(spec: FamilySpec, n: int) -> float:
    """Residual of the family's explicit (near-)kernel element at size n.

    difference-chain: ||F x - (1/n) e_n|| for x = sum_j e_j / j, which is
    an exact identity at every truncation (residual at rounding level).
    geometric-kernel: ||F x|| / ||x|| for the truncated kernel witness,
    which decays to zero as n grows.
    """
    if spec.kind == DIFFERENCE_CHAIN:
        frame = truncate(spec, n)
        f = synthesis_matrix(frame)
        x = 1.0 / np.arange(1, n + 1)
        expected = np.zeros(n)
        expected[-1] = 1.0 / n
        return float(np.linalg.norm(f @ x - expected))
    if spec.kind == GEOMETRIC_KERNEL:
        frame = truncate(spec, n)
        f = synthesis_matrix(frame)
        x = np.sqrt(2.0) ** -(np.arange(1, n + 1) - 1.0)
        x[0] = -1.0
        return float(np.linalg.norm(f @ x) / np.linalg.norm(x))
    raise WrongFamily(f"no kernel witness for family {spec.kind!r}")


def unboundedness_probe(spec: FamilySpec, sizes: Sequence[int]) -> list[float]:
    """Largest singular value of the truncation at each size (sum-spike only)."""
    if spec.kind != SUM_SPIKE:
        raise WrongFamily("the unboundedness probe is defined for sum-spike")
    out = []
    for n in sizes:
        pd = polar_decompose(synthesis_matrix(truncate(spec, n)))
        out.append(float(pd.singulars[0]))
    return out
