"""Exception hierarchy shared by all quiverhorn modules."""


class QuiverHornError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(QuiverHornError, ValueError):
    """Input data is structurally invalid (wrong vertex set, bad dims, ...)."""


class ContainmentError(DomainError):
    """A family that must be contained in another is not."""


class ProfileError(DomainError):
    """A filtration profile is malformed or incompatible."""


class QueryError(DomainError):
    """An intersection query violates its invariants."""


class CapacityError(QuiverHornError, RuntimeError):
    """A requested computation exceeds the configured enumeration bounds."""


class ParseError(QuiverHornError, ValueError):
    """A document could not be parsed; carries a human-readable location."""

    def __init__(self, message, line=None, column=None):
        loc = ""
        if line is not None:
            loc = f" (line {line}" + (f", column {column}" if column is not None else "") + ")"
        super().__init__(message + loc)
        self.line = line
        self.column = column
