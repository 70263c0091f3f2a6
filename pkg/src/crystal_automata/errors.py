"""Exception hierarchy.

Every error raised by the library derives from :class:`CrystalError`, which is
itself a :class:`ValueError` so callers that only care about bad input can
catch the builtin.
"""


__all__ = [
    "CrystalError",
    "NegativeCoordinateError",
    "EmptyVectorError",
    "LengthMismatchError",
    "ConstraintViolationError",
    "InvalidShapeError",
    "DimensionMismatchError",
    "IndexOutOfRangeError",
    "UnsupportedRankError",
    "InternalInvariantViolation",
    "NotStabilizedError",
    "MarginTooSmallError",
    "NotCanonicallyOrderedError",
    "InvalidSpeciesError",
    "NegativeInputError",
    "ShapeMismatchError",
    "ParseError",
    "ConfigError",
    "UnknownSuiteError",
]


class CrystalError(ValueError):
    pass


class NegativeCoordinateError(CrystalError):
    pass


class EmptyVectorError(CrystalError):
    pass


class LengthMismatchError(CrystalError):
    pass


class ConstraintViolationError(CrystalError):
    """Raised when x_n and xbar_n are both nonzero."""


class InvalidShapeError(CrystalError):
    pass


class DimensionMismatchError(CrystalError):
    """Two elements (or an element and a state) do not share the same n."""


class IndexOutOfRangeError(CrystalError, IndexError):
    pass


class UnsupportedRankError(CrystalError):
    """Type-D maps need n >= 3."""


class InternalInvariantViolation(CrystalError):
    """A computed output broke a type invariant; this is a bug, not bad input."""


class NotStabilizedError(CrystalError):
    pass


class MarginTooSmallError(CrystalError):
    pass


class NotCanonicallyOrderedError(CrystalError):
    def __init__(self, message, block=None):
        super().__init__(message)
        self.block = block


class InvalidSpeciesError(CrystalError):
    pass


class NegativeInputError(CrystalError):
    pass


class ShapeMismatchError(CrystalError):
    pass


class ParseError(CrystalError):
    def __init__(self, message, line=None, column=None):
        where = ""
        if line is not None:
            where = f"line {line}" + (f", column {column}" if column is not None else "")
            where += ": "
        super().__init__(where + message)
        self.line = line
        self.column = column


class ConfigError(CrystalError):
    pass


class UnknownSuiteError(CrystalError):
    pass
