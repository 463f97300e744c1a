"""Exception types shared across the package."""


class RevMagicError(Exception):
    """Base class for all errors raised by revmagic."""


class RangeError(RevMagicError, ValueError):
    """A count, width or bound is outside the supported range."""


class ShapeError(RevMagicError, ValueError):
    """Operands have incompatible widths or a sequence is too short."""


class OrderError(RevMagicError, ValueError):
    """Subtraction operands are in the wrong order (minuend < subtrahend)."""


class DomainError(RevMagicError, ValueError):
    """The input lies outside the domain of the operation."""


class PalindromeError(DomainError):
    """A palindromic input was given where a non-palindrome is required.

    For the 1089 procedure this means the difference, and hence the
    result, would be zero.
    """


class VerificationError(RevMagicError, AssertionError):
    """A checked identity did not hold."""
