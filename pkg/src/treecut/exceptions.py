"""
Custom exceptions for the treecut library.

Every exception carries the process exit code the command-line interface
reports when it escapes a subcommand.
"""
from typing import Any, Optional


class TreecutError(Exception):
    """Base class for all treecut errors."""
    exit_code = 1


class UsageError(TreecutError):
    """Bad or missing command-line input."""
    exit_code = 2


class GraphParseError(TreecutError):
    """A graph document could not be parsed."""
    exit_code = 3


class PartitionParseError(TreecutError):
    """A partition document could not be parsed."""
    exit_code = 3


class PreconditionError(TreecutError):
    """An operation was called on inputs outside its domain."""
    exit_code = 4


class InvalidGraphError(PreconditionError):
    """Self loops, parallel edges or out-of-range endpoints."""


class DisconnectedGraphError(PreconditionError):
    """The operation needs a connected graph."""


class InvalidPartitionError(PreconditionError):
    """Blocks are empty, overlap or fail to cover the node set."""


class UnknownPartitionError(PreconditionError):
    """An observed outcome is missing from the exact support."""

    def __init__(self, message: str, outcome: Any = None):
        super().__init__(message)
        self.outcome = outcome


class BudgetExceededError(TreecutError):
    """Exhaustive enumeration would exceed its configured budget."""
    exit_code = 5

    def __init__(self, message: str, required: Optional[int] = None, limit: Optional[int] = None):
        super().__init__(message)
        self.required = required
        self.limit = limit


class VerificationFailed(TreecutError):
    """Sampled frequencies disagree with the exact law."""
    exit_code = 6

    def __init__(self, message: str, report: Any = None):
        super().__init__(message)
        self.report = report
