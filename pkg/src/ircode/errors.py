"""Exception hierarchy shared by every module."""


class IrcodeError(Exception):
    """Base class for all errors raised by this package."""


class ParameterError(IrcodeError, ValueError):
    """Invalid user-supplied parameters (CLI exit code 2)."""


class NotPrime(ParameterError):
    pass


class BadSubfield(ParameterError):
    pass


class NotDividing(ParameterError):
    pass


class CapExceeded(ParameterError):
    pass


class NotInPrimeField(IrcodeError):
    pass


class NoSolution(IrcodeError):
    pass


class AmbiguousOrbit(IrcodeError):
    pass


class HypothesisViolated(ParameterError):
    pass


class UndefinedExponent(ParameterError):
    pass


class UnsupportedOrder(IrcodeError):
    """N2 has no closed-form factorization here (CLI exit code 3)."""


class DimensionMismatch(IrcodeError):
    """ord_n(q) != m, so the code does not have dimension m (CLI exit code 4)."""


# Internal consistency failures. These indicate a transcription problem in a
# closed form or a bug, never bad input.

class IntegralityFailure(IrcodeError, ArithmeticError):
    pass


class NonIntegralPeriod(IrcodeError, ArithmeticError):
    pass


class IrrationalResidue(IrcodeError, ArithmeticError):
    pass
