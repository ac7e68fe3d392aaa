"""Exception hierarchy shared by every module of the toolkit."""


class EnbcError(Exception):
    """Base class for all toolkit errors."""


class InputError(EnbcError, ValueError):
    """Bad user input (matrix, order, file); maps to CLI exit code 2."""


class MalformedJson(InputError):
    pass


class BadEntry(InputError):
    pass


class EmptyMatrix(InputError):
    pass


class LoopDetected(InputError):
    pass


class ParallelDetected(InputError):
    pass


class IndexOutOfRange(InputError, IndexError):
    pass


class DependentInput(InputError):
    pass


class UnknownCommand(InputError):
    pass


class AmbientMismatch(EnbcError, ValueError):
    pass


class NotDivisible(EnbcError, ArithmeticError):
    pass


class DegreeTooSmall(EnbcError, ValueError):
    pass


class DegreeMismatch(EnbcError, ValueError):
    pass


class NotAGenerator(EnbcError, ValueError):
    pass


class SignViolation(EnbcError, ValueError):
    pass


class PoleAtZero(EnbcError, ZeroDivisionError):
    pass


class NonUnitDenominator(EnbcError, ValueError):
    pass


class EmptyComplex(EnbcError, ValueError):
    pass


class ResourceLimit(EnbcError, RuntimeError):
    """A configured work budget was exhausted; maps to CLI exit code 3."""
