"""Exception types shared across the package."""


class ZlatError(Exception):
    """Base class for all domain errors raised by this package."""


class SingularMatrixError(ZlatError):
    """Matrix inversion was requested for a singular matrix."""


class NotIntegralError(ZlatError):
    """An operation requiring an integral lattice got a non-integral one."""


class NotPositiveDefiniteError(ZlatError):
    """A Gram matrix failed the positive-definiteness check."""

class EnumerationCapError(ZlatError):
    """Dimension or subgroup count exceeds the configured enumeration cap."""


class NotIsometryError(ZlatError):
    """The supplied matrix does not preserve the bilinear form."""


class OrderNotPrimeError(ZlatError):
    """The supplied automorphism does not have prime order."""


class NotElementaryError(ZlatError):
    """The p-part of the discriminant group is not elementary abelian."""


class PrecisionError(ZlatError):
    """A sign or comparison stayed undecidable at the maximum precision."""


class ParameterError(ZlatError):
    """An argument was outside its documented range."""
