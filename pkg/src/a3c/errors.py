"""Exception hierarchy shared by all modules."""


class A3CError(Exception):
    """Base class for every error raised by the engine."""


# scalar
class DivisionByZeroExpr(A3CError, ZeroDivisionError):
    pass


class UnboundParam(A3CError, KeyError):
    pass


class DenominatorVanishes(A3CError, ZeroDivisionError):
    pass


class InvalidAssignment(A3CError, ValueError):
    pass


# frame_alg / liegeom
class DegreeOverflow(A3CError, ValueError):
    pass


class DegreeMismatch(A3CError, ValueError):
    pass


class NonConstantCoefficients(A3CError, ValueError):
    pass


class PointwiseUnsupported(A3CError, NotImplementedError):
    pass


# acms / connections
class InvalidStructure(A3CError, ValueError):
    pass


class NonUnitParam(A3CError, ValueError):
    pass


class UndeterminedAtNZero(A3CError, ValueError):
    pass


class ExistenceFailed(A3CError, ValueError):
    pass


class NotSkew(A3CError, ValueError):
    pass


class NotKilling(A3CError, ValueError):
    pass


class NotCanonical(A3CError, ValueError):
    pass


class NotSasakiFamily(A3CError, ValueError):
    pass


class NonNegativeBeta(A3CError, ValueError):
    pass


# deform
class InvalidParams(A3CError, ValueError):
    pass


class WrongSignProduct(A3CError, ValueError):
    pass


class NotRationallyRealizable(A3CError, ValueError):
    pass


# spin7
class WrongDimension(A3CError, ValueError):
    pass


class SpectrumMismatch(A3CError, ValueError):
    pass


class NotGeneralizedKilling(A3CError, ValueError):
    pass


class NonUnitPoint(A3CError, ValueError):
    pass


# catalog
class InvalidN(A3CError, ValueError):
    pass


# dsl
class DslSyntaxError(A3CError, SyntaxError):
    """Parse failure carrying a 1-based line and column."""

    def __init__(self, message, line, col):
        super().__init__(f"{message} at line {line}, column {col}")
        self.message = message
        self.line = line
        self.col = col


class DuplicateFrameName(DslSyntaxError):
    pass


class IndexOutOfRange(DslSyntaxError):
    pass


class JacobiFailure(A3CError, ValueError):
    pass
