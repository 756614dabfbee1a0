"""Exception types shared across the package."""

from __future__ import annotations


class EigraphError(Exception):
    """Base class for all errors raised by this package."""


class InvalidVertex(EigraphError):
    """A vertex index falls outside 1..n."""


class SelfLoop(EigraphError):
    """An edge pair has equal endpoints."""


class InvalidFamilyParams(EigraphError):
    """Generator or family parameters are invalid (bad n, non-prime q, ...)."""


class EnumerationTooLarge(EigraphError):
    """Exhaustive enumeration requested beyond the supported vertex count."""


class MalformedGraph6(EigraphError):
    """Input is not a valid graph6 string (bad byte, bad length, bad padding)."""


class ParseError(EigraphError):
    """Edge-list text could not be parsed; carries the 1-based line number."""

    def __init__(self, message: str, line_no: int):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


class NonConvergence(EigraphError):
    """The eigensolver failed to converge; carries the final residual."""

    def __init__(self, message: str, residual: float):
        super().__init__(message)
        self.residual = residual


class ZeroVector(EigraphError):
    """A Rayleigh quotient was requested for the zero vector."""


class InsufficientGrid(EigraphError):
    """A trend verdict needs at least three grid points."""
