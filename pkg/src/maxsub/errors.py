"""Exception and warning types shared across the package."""

from __future__ import annotations


class MaxsubError(Exception):
    """Base class for all package-specific errors."""


class InvalidRankError(MaxsubError):
    """Rank outside the admissible range 1 <= k < r."""


class InvalidInputError(MaxsubError):
    """Parameter outside its documented range (for example genus below 2)."""


class NotHomogeneousError(MaxsubError):
    """Polynomial mixes several weighted degrees."""


class ZeroPolynomialError(MaxsubError):
    """The weighted degree of the zero polynomial is undefined."""


class DegreeMismatchError(MaxsubError):
    """A weighted degree does not match the value the query forces."""

    def __init__(self, got: int, expected: int, context: str = ""):
        self.got = got
        self.expected = expected
        where = f" ({context})" if context else ""
        super().__init__(
            f"weighted degree is {got} but the query requires {expected}{where}"
        )


class ConditionViolatedError(MaxsubError):
    """The zero-dimensionality congruence fails for the given parameters."""


class NotApplicableError(MaxsubError):
    """No closed form covers the requested parameters."""


class PolyParseError(MaxsubError):
    """Syntax error in a polynomial expression; ``column`` is 1-based."""

    def __init__(self, message: str, column: int):
        self.column = column
        super().__init__(f"{message} (column {column})")


class InternalConsistencyError(MaxsubError):
    """A cross-check that should be unconditionally true has failed.

    Seeing this means a bug in the package, not bad input.
    """


class NotRationalError(InternalConsistencyError):
    """A full root-of-unity sum failed to collapse to a rational number."""


class PathMismatchError(InternalConsistencyError):
    """Two independent evaluation paths returned different values."""


class NonIntegralExponentError(InternalConsistencyError):
    """A sign exponent forced integral by a congruence came out fractional."""


class GeometricRangeWarning(UserWarning):
    """The query evaluates formally but lies outside the geometric regime."""
