"""Exception hierarchy shared by every module of the package."""


class CordRingError(Exception):
    """Base class for all errors raised by cordring."""


class ParseError(CordRingError, ValueError):
    """Malformed textual input (braid words, PD codes, fractions, ...)."""


class InvalidGenerator(ParseError):
    """A braid letter whose absolute value is not below the strand count."""


class StrandMismatch(CordRingError, ValueError):
    pass


class OddStrands(CordRingError, ValueError):
    pass


class NotAKnot(CordRingError, ValueError):
    """The requested closure has more than one component."""


class IncompleteTable(CordRingError, KeyError):
    pass


class UndefinedDegree(CordRingError, ValueError):
    pass


class DegreeCapExceeded(CordRingError):
    """An intermediate polynomial grew past the configured degree cap."""

    def __init__(self, degree, cap):
        super().__init__(f"degree {degree} exceeds cap {cap}")
        self.degree = degree
        self.cap = cap


class ExtractionError(CordRingError):
    """A monomial of an extended image lacks its terminal/leading * factor."""


class InternalError(CordRingError):
    pass
