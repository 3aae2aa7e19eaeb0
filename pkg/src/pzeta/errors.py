"""Exception taxonomy shared by all pzeta modules."""

from __future__ import annotations


class PzetaError(Exception):
    """Base class for all library errors."""


class InvalidParameter(PzetaError):
    """A constructor argument is outside the supported range."""


class OrderBoundExceeded(PzetaError):
    """A group (or quotient) is larger than the configured hard bound."""


class BudgetExceeded(PzetaError):
    """A lattice computation ran out of its resource budget.

    Carries partial statistics about how far the computation got; no
    partial lattice is ever returned.
    """

    def __init__(self, message: str, stats: dict | None = None):
        super().__init__(message)
        self.stats = dict(stats or {})


class NotNormal(PzetaError):
    """A quotient was requested by a subgroup that is not normal."""


class ZeroDivisor(PzetaError):
    """Division by the zero Dirichlet polynomial."""


class NotDivisible(PzetaError):
    """No exact quotient exists within the requested support bound."""


class FactorNotUnital(PzetaError):
    """A product factor does not have constant coefficient 1."""


class NonUnitDenominator(PzetaError):
    """A rational series denominator whose constant term is not +-1."""


class HypothesisViolated(PzetaError):
    """Input factor data does not satisfy the shape hypothesis required
    by the witness-extraction procedure."""


class EmptyInput(PzetaError):
    """An operation that needs at least one factor received none."""
