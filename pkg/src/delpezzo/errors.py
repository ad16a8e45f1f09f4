"""Exception hierarchy shared by every module."""


class DelPezzoError(ValueError):
    """Base class for all errors raised by this package."""

    #: short machine-readable name used in structured CLI errors
    kind = "Error"


class ParseError(DelPezzoError):
    kind = "ParseError"


class EvalAtPole(DelPezzoError, ZeroDivisionError):
    """A Laurent polynomial was evaluated where one of its poles lies."""

    kind = "EvalAtPole"


class DuplicatePoint(DelPezzoError):
    kind = "DuplicatePoint"


class NotGeneric(DelPezzoError):
    kind = "NotGeneric"


class DimensionMismatch(DelPezzoError):
    kind = "DimensionMismatch"


class UnsupportedSurface(DelPezzoError):
    kind = "UnsupportedSurface"


class NotVanishing(DelPezzoError):
    """A field on CP^2 meant to represent one on B_r does not vanish at the points."""

    kind = "NotVanishing"
