class JackError(Exception):
    """
    Base class of every error raised by the library and the command line.
    The exit code is what `jack` returns when the error reaches the top level.
    """
    exit_code = 1


class UsageError(JackError):
    """
    Bad flags, limits exceeded or unreadable input
    """
    exit_code = 2


class MathPreconditionError(JackError):
    """
    A mathematical precondition of an operation does not hold
    """
    exit_code = 3


class ZeroDenominator(MathPreconditionError):
    pass


class DivisionByZero(MathPreconditionError):
    pass


class PoleAtPoint(MathPreconditionError):
    pass


class AlreadyPresent(MathPreconditionError):
    pass


class WrongCardinality(MathPreconditionError):
    pass


class InvalidLabel(MathPreconditionError):
    pass


class NotColumnStrict(MathPreconditionError):
    pass


class NotRowStrict(MathPreconditionError):
    pass


class ParameterOutOfRange(MathPreconditionError):
    pass


class MalformedInput(MathPreconditionError):
    pass


class UnsupportedMove(MathPreconditionError):
    pass


class InvariantViolation(JackError):
    """
    Something that must hold by construction did not
    """
    exit_code = 4


class DegenerateSpectralGap(InvariantViolation):
    pass


class NonGenericWarning(UserWarning):
    """
    Evaluation at kappa = p/q with q <= N, where the polynomials need not exist
    """
    pass
