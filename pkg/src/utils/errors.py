"""Exception hierarchy shared by every minorforge module."""

from typing import Any, Dict, Optional


class MinorforgeError(Exception):
    """Base class for all library errors."""


class MalformedInputError(MinorforgeError, ValueError):
    """Input refers to vertices that do not exist or violates a structural precondition."""


class BudgetExceeded(MinorforgeError):
    """A bounded search ran out of node expansions before finishing."""

    def __init__(self, limit: int, spent: int, where: str = "") -> None:
        self.limit = limit
        self.spent = spent
        self.where = where
        label = f" in {where}" if where else ""
        super().__init__(f"search budget of {limit} nodes exceeded{label}")


class TooLarge(MinorforgeError):
    """Instance exceeds the size an exact procedure accepts."""


class HypothesisUnmet(MinorforgeError):
    """A premise required by a constructive procedure does not hold."""


class NotNormalized(MinorforgeError):
    """Perpendicular normalization could not finish within its budget."""


class NoModel(MinorforgeError):
    """K6 synthesis found no model; ``diagnostics`` says what was tried."""

    def __init__(self, message: str, diagnostics: Optional[Dict[str, Any]] = None) -> None:
        self.diagnostics = diagnostics or {}
        super().__init__(message)


class PerpendicularityRequired(MinorforgeError):
    """A certificate must be perpendicular to the nest before synthesis."""


class InvalidWitnessError(MinorforgeError, ValueError):
    """A supplied witness object does not verify."""


class InvalidStepError(MinorforgeError, ValueError):
    """A rerouting step violates its own preconditions."""
