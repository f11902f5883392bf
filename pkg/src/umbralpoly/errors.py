"""Exception types shared across the package."""


class UmbralError(Exception):
    """Base class for errors raised by this package."""


class GammaPoleError(UmbralError):
    """An evaluation touched a pole of the gamma function.

    Raised when a moment or series coefficient requires 1/Gamma(z) at a
    nonpositive integer z, e.g. the c-moment at a negative integer
    exponent or a Tricomi-type series with negative integer order.
    """


class NoConvergenceError(UmbralError):
    """A truncated series hit its term cap before the stop criterion."""

    def __init__(self, message, terms_used=None):
        super().__init__(message)
        self.terms_used = terms_used


class DomainError(UmbralError):
    """Arguments lie outside the region where a formula is defined.

    The message names the violated precondition (zero denominator,
    negative square root argument, singular prefactor, and so on).
    """
