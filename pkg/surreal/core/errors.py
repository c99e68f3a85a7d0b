"""
Exception hierarchy for the surreal packages.

Every error raised on purpose by this package derives from ``SurrealError``
and carries the offending data as attributes, so callers (the CLI in
particular) can report it without parsing the message.
"""

from typing import Any, Optional


class SurrealError(Exception):
    """Base class for all surreal errors."""


class UnknownNode(SurrealError):
    """An id does not refer to a node stored in the arena."""

    def __init__(self, node_id: Any):
        self.node_id = node_id
        super().__init__(f"Unknown node id: {node_id!r}")


class CutViolation(SurrealError):
    """A left option is not less than a right option."""

    def __init__(self, left: int, right: int, detail: str = ""):
        self.left = left
        self.right = right
        message = f"Cut condition violated: left option #{left} is not less than right option #{right}"
        if detail:
            message = f"{message} ({detail})"
        super().__init__(message)


class EmptyInterval(SurrealError):
    """No dyadic lies strictly between the given bounds."""

    def __init__(self, lower: Any, upper: Any):
        self.lower = lower
        self.upper = upper
        super().__init__(f"Empty interval: ({lower}, {upper})")


class NegativeOperand(SurrealError):
    """An operation defined on (non)negative numbers received a negative one."""

    def __init__(self, operation: str, node_id: int):
        self.operation = operation
        self.node_id = node_id
        super().__init__(f"{operation} requires a nonnegative operand, got node #{node_id}")


class ResourceLimit(SurrealError):
    """A configured size budget would be exceeded."""

    def __init__(self, requested: int, budget: int, what: str = "nodes"):
        self.requested = requested
        self.budget = budget
        super().__init__(f"Resource limit exceeded: {requested} {what} requested, budget is {budget}")


class NotInTree(SurrealError):
    """A node is not part of a generated tree."""

    def __init__(self, node_id: int):
        self.node_id = node_id
        super().__init__(f"Node #{node_id} is not in the generated tree")


class SameNode(SurrealError):
    """Two arguments that must differ refer to the same node."""

    def __init__(self, node_id: int):
        self.node_id = node_id
        super().__init__(f"Bifurcation of node #{node_id} with itself is undefined")


class EvaluationError(SurrealError):
    """An expression is well formed but cannot be evaluated."""


class ExpressionSyntaxError(SurrealError):
    """Parse failure with the input position and what was expected there."""

    def __init__(self, position: int, expected: str, found: Optional[str] = None):
        self.position = position
        self.expected = expected
        self.found = found
        where = f"'{found}'" if found else "end of input"
        super().__init__(f"Syntax error at position {position}: expected {expected}, found {where}")


class ConfigurationError(SurrealError):
    """Configuration file or environment override is invalid."""
