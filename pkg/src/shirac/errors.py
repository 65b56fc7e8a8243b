"""Exception hierarchy.

``DomainError`` subclasses are the ones the CLI maps to exit code 2.
"""


class ShiracError(Exception):
    pass


class DomainError(ShiracError):
    pass


class DegenerateTrain(DomainError):
    """Infinitely many impulses would land on a single point."""

    def __init__(self, message, summand=None, factor=None):
        super().__init__(message)
        self.summand = summand
        self.factor = factor


class UnboundedExpansion(DomainError):
    """An infinite train was expanded without a window."""


class NegativeAmplitude(DomainError):
    pass


class UnsupportedMaskKind(DomainError):
    pass


class ShiftMismatch(ShiracError):
    pass


class Unsupported(ShiracError):
    pass


class DimensionMismatch(ShiracError):
    pass


class SpecError(ShiracError):
    """Malformed spec document."""
