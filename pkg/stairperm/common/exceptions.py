"""
Exceptions raised by the library.

Value-type errors also derive from ``ValueError`` so callers may catch either.
"""


class StairpermError(Exception):
    """Base class of every error raised by the library."""


class InvalidInputError(StairpermError, ValueError):
    """Malformed or inconsistent input (duplicate entries, bad text formats, empty input)."""


class InvalidEncodingError(StairpermError, ValueError):
    """A staircase encoding with a cell outside the grid or an empty cell value."""


class DivisionValuationError(StairpermError, ArithmeticError):
    """Series division where the dividend has smaller valuation than the divisor."""


class SeriesDomainError(StairpermError, ArithmeticError):
    """A series operation applied outside its domain (e.g. square root of a series with constant term other than 1)."""


class NonIntegralSeriesError(StairpermError, ArithmeticError):
    """A series expected to have integer coefficients carries a proper fraction."""


class ContractionError(StairpermError, ArithmeticError):
    """A fixed-point iteration failed to stabilize."""


class ResourceLimitError(StairpermError):
    """A brute-force computation was requested beyond the configured ceiling."""

    def __init__(self, message: str, subject: str = "") -> None:
        super().__init__(message)
        self.subject = subject


class UnsupportedTheoremError(StairpermError, ValueError):
    """An unknown theorem id, or a basis the requested theorem does not cover."""
