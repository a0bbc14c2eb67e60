"""Exception hierarchy.

Every error raised on purpose by the library derives from `TchebyshevError`,
so callers (the CLI in particular) can map families of failures onto exit
codes without string matching.
"""


class TchebyshevError(Exception):
    """Base class for all library errors."""


class PosetFormatError(TchebyshevError):
    """Input could not be turned into a valid graded bounded poset."""


class MalformedLine(PosetFormatError):
    pass


class NotGraded(PosetFormatError):
    pass


class NotBounded(PosetFormatError):
    pass


class CycleDetected(PosetFormatError):
    pass


class PolyParseError(TchebyshevError):
    pass


class DomainError(TchebyshevError):
    """A well-formed input lies outside the domain of an operation."""


class NotCdExpressible(DomainError):
    pass


class NonPositiveDegree(DomainError):
    pass


class NotComparable(DomainError):
    pass


class PreconditionError(TchebyshevError):
    pass


class RankZeroInput(PreconditionError):
    pass


class RankZeroOperand(PreconditionError):
    pass


class BadParameter(PreconditionError):
    pass


class UnknownCheck(TchebyshevError):
    pass
