"""Shared result types and exceptions."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


class HermiteCalculusError(Exception):
    """Base class for errors raised by this package."""


class DomainError(HermiteCalculusError, ValueError):
    """Argument outside the domain where the quantity is defined."""


class PoleError(DomainError):
    """Evaluation at a pole (e.g. Gamma at a non-positive integer)."""


class BranchError(DomainError):
    """A square-root branch cut was crossed between quadrature nodes."""


class DivergenceError(HermiteCalculusError, ArithmeticError):
    """The requested series is outside its region of convergence."""


class ConvergenceError(HermiteCalculusError, ArithmeticError):
    """An iterative procedure hit its refinement cap without converging."""


@dataclass(frozen=True)
class SeriesResult:
    """Value of a truncated series plus truncation diagnostics.

    ``error_estimate`` is absolute.  ``converged`` is set when the estimate
    is within the caller's relative tolerance of ``|value|``.
    """

    value: Any
    terms_used: int
    last_term: float
    converged: bool
    error_estimate: float
    terms: tuple = ()
    details: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.terms_used < 1:
            raise ValueError("terms_used must be >= 1")
        if not self.error_estimate >= 0:
            raise ValueError("error_estimate must be non-negative")

    def __float__(self):
        return float(self.value)
