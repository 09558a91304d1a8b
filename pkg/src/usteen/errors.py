"""Exception hierarchy shared by every module of the package."""


class SteenrodError(Exception):
    """Base class for all errors raised by usteen."""


class NotOddPrime(SteenrodError, ValueError):
    pass


class NegativeInput(SteenrodError, ValueError):
    pass


class NegativeTop(SteenrodError, ValueError):
    pass


class NegativeN(SteenrodError, ValueError):
    pass


class IndexOverflow(SteenrodError, OverflowError):
    pass


class Inhomogeneous(SteenrodError, ValueError):
    pass


class WrongLength(SteenrodError, ValueError):
    pass


class AlreadyAdmissible(SteenrodError, ValueError):
    pass


class DomainViolation(SteenrodError, ValueError):
    pass


class NotInSubspace(SteenrodError, ValueError):
    pass


class ClosureViolation(SteenrodError, AssertionError):
    """A right action left the module V_s; would contradict the module structure."""


class FuelExhausted(SteenrodError, RuntimeError):
    """The rewrite budget ran out before every word was admissible.

    ``stats`` carries the ReductionStats at the moment of exhaustion and
    ``partial`` the polynomial reached so far.
    """

    def __init__(self, message, stats=None, partial=None):
        super().__init__(message)
        self.stats = stats
        self.partial = partial


class ExprSyntaxError(SteenrodError, ValueError):
    """Malformed expression text. ``position`` is a 0-based character offset."""

    def __init__(self, message, position=None, expected=()):
        self.position = position
        self.expected = tuple(expected)
        detail = message
        if position is not None:
            detail += f" at position {position}"
        if self.expected:
            detail += f" (expected {' or '.join(self.expected)})"
        super().__init__(detail)


class BadEpsilon(ExprSyntaxError):
    pass
