"""Exception types shared across the package.

Every failure raised by framekit derives from :class:`FramekitError`, so
callers (and the CLI exit-code mapping) can distinguish input problems,
non-existence results, and numerical breakdowns without string matching.
"""


class FramekitError(Exception):
    """Base class for all framekit errors."""


class BadShape(FramekitError):
    """Matrix or frame dimensions are incompatible with the operation."""


class BadSize(FramekitError):
    """Requested truncation size is too small for the family."""


class NotHermitian(FramekitError):
    """Input matrix failed the Hermitian symmetry check."""


class NotPsd(FramekitError):
    """Input matrix has an eigenvalue too negative to clamp."""


class NoConvergence(FramekitError):
    """The underlying eigenvalue/SVD iteration did not converge."""


class ZeroFrame(FramekitError):
    """All frame vectors are zero; the requested quantity is undefined."""


class IndexMismatch(FramekitError):
    """Two frames do not share the same index set or ambient dimension."""


class NotNormalizedTight(FramekitError):
    """The supplied frame is not a normalized tight frame of the full space."""


class IdentityMismatch(FramekitError):
    """A distance identity that holds analytically failed numerically.

    Signals that the rank cutoff misclassified a singular value and the
    computed quantities cannot be trusted.
    """


class NoExtension(FramekitError):
    """The orthogonal complement of the range is too small to absorb the kernel."""


class BadCokernel(FramekitError):
    """Supplied cokernel columns are not orthonormal or not orthogonal to ran F."""


class WrongFamily(FramekitError):
    """The diagnostic is defined for a different frame family."""


class ParseError(FramekitError):
    """A frame file or CLI input could not be parsed."""
