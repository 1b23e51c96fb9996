"""Exception hierarchy.

Every error raised for a violated mathematical precondition derives from
:class:`DomainError`; the CLI maps those to exit code 1.
"""

__all__ = [
    "ConstantInput",
    "DegreeOrder",
    "DegreeTooSmall",
    "DivisionByZeroPoly",
    "DomainError",
    "EmptySequence",
    "IncompletePrs",
    "IndexOutOfRange",
    "JOutOfRange",
    "NonSquare",
    "PolyParseError",
    "SingularMatrix",
    "SingularU",
    "ZeroInput",
    "ZeroPolynomial",
]


class DomainError(Exception):
    """Base class for precondition violations on exact inputs."""


class NonSquare(DomainError, ValueError):
    pass


class IndexOutOfRange(DomainError, IndexError):
    pass


class SingularMatrix(DomainError, ArithmeticError):
    pass


class SingularU(SingularMatrix):
    """The border block U of a reduced nested construction is singular."""

    def __init__(self, level, message=None):
        self.level = level
        super().__init__(message or f"U^({level}) is singular; the reduced nested "
                         f"subresultant matrix is undefined at level {level}")


class ZeroPolynomial(DomainError, ValueError):
    pass


class DivisionByZeroPoly(DomainError, ZeroDivisionError):
    pass


class DegreeTooSmall(DomainError, ValueError):
    pass


class DegreeOrder(DomainError, ValueError):
    pass


class ZeroInput(DomainError, ValueError):
    pass


class JOutOfRange(IndexOutOfRange):
    pass


class IncompletePrs(DomainError, ValueError):
    pass


class EmptySequence(DomainError, ValueError):
    pass


class ConstantInput(DomainError, ValueError):
    pass


class PolyParseError(DomainError, ValueError):
    pass
