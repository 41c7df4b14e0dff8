"""Domain errors.

All of them are ValueError subclasses so callers that only know about
ValueError keep working. The CLI maps them to exit codes:
- HyperstateError (and plain ValueError/TypeError) -> 2
- CrossCheckFailed -> 3
"""

from __future__ import annotations


class HyperstateError(ValueError):
    pass


class CapExceeded(HyperstateError):
    pass


class NotGhzOddForm(HyperstateError):
    def __init__(self, message: str, residual: float | None = None):
        super().__init__(message)
        self.residual = residual


class UnsupportedFamily(HyperstateError):
    pass


class UnsupportedCase(HyperstateError):
    pass


class NonConvergence(HyperstateError):
    pass


class HypothesisFailed(HyperstateError):
    def __init__(self, message: str, report=None):
        super().__init__(message)
        self.report = report


class CrossCheckFailed(HyperstateError):
    """Two computation paths disagree beyond tolerance."""

    def __init__(self, message: str, values: dict | None = None):
        super().__init__(message)
        self.values = values or {}
