"""Exception types raised across the package."""

from __future__ import annotations


class VitalrankError(Exception):
    """Base class for errors raised by this package."""


class EdgeListParseError(VitalrankError):
    """Malformed or empty edge-list input."""

    def __init__(self, message: str, line_number: int | None = None):
        self.line_number = line_number
        if line_number is not None:
            message = f"line {line_number}: {message}"
        super().__init__(message)


class ConvergenceError(VitalrankError):
    """An iterative solver did not reach its tolerance."""

    def __init__(self, message: str, residual: float):
        self.residual = residual
        super().__init__(f"{message} (residual {residual:.3e})")
