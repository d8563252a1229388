"""Exception hierarchy shared across the library.

Everything derives from DomainError so callers (notably the CLI) can map
invalid-mathematical-input conditions to a single exit code.
"""


class DomainError(ValueError):
    """Base class for all domain-level errors raised by this package."""


class NotWeaklyDecreasing(DomainError):
    """A part list fails to be weakly decreasing."""


class LengthExceedsOrder(DomainError):
    """A partition is longer than the truncation order allows."""


class TruncationMismatch(DomainError):
    """Two values built over different truncation orders were combined."""


class TruncationExhausted(DomainError):
    """An operation needs more series coefficients than are stored."""


class NotInKernel(DomainError):
    """A series expected to solve the generic linear ODE does not."""


class WrongCharge(DomainError):
    """A wedge vector has the wrong charge for the requested map."""


class InsufficientIndexBound(DomainError):
    """A computation with free h-generators would exceed the declared bound."""
