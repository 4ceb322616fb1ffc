"""
Exception hierarchy for the simulator.

Every error carries a human-readable ``message`` so the CLI can print it
without a traceback. Raise configuration problems *before* day 1 of a run so
no partial output is left on disk.
"""

from typing import Optional


class SeconetError(Exception):
    """Base class for all simulator errors.

    Attributes:
        message: Human-readable description of what went wrong.
    """

    def __init__(self, message: str) -> None:
        super().__init__(message)
        self.message = message


class ConfigurationError(SeconetError, ValueError):
    """Raised when a scenario, growth or epidemic configuration is invalid.

    Example::

        if abs(sum(weights) - 1.0) > WEIGHT_SUM_TOLERANCE:
            raise ConfigurationError("age_distribution weights must sum to 1")
    """


class SeedingError(SeconetError):
    """Raised when the initial m0 links cannot be formed."""


class ConvergenceError(SeconetError):
    """Raised when an iterative solver stops before reaching its tolerance.

    Attributes:
        residual: Max-norm difference between the last two iterates.
    """

    def __init__(self, message: str, residual: Optional[float] = None) -> None:
        super().__init__(message)
        self.residual = residual


class ContractViolationError(SeconetError, RuntimeError):
    """Raised when a caller breaks an operation's precondition.

    Used for stale centrality scores and for vaccinating a node that is
    not susceptible.
    """
