"""Base Exception Classes for the project."""

from typing import Any


class EgyptianError(Exception):
    """Base exception for every failure raised by the services.

    Mirrors an API exception: a human ``detail``, a machine ``code`` and, in place of an HTTP status,
    the process ``exit_code`` the CLI terminates with.
    """

    exit_code: int = 1
    default_detail: str = "A computation error occurred"
    default_code: str = "error"

    def __init__(
        self,
        detail: str | None = None,
        code: str | None = None,
        exit_code: int | None = None,
    ) -> None:
        self.detail = detail if detail is not None else self.default_detail
        self.code = code if code is not None else self.default_code
        if exit_code is not None:
            self.exit_code = exit_code
        super().__init__(self.detail)

    def as_context(self) -> dict[str, Any]:
        """Structured fields attached to log records."""
        return {"code": self.code, "exit_code": self.exit_code}


class DomainError(EgyptianError):
    """An argument lies outside the domain of the operation (n out of range, bad prime, ...)."""

    default_detail = "Argument outside the domain of the operation"
    default_code = "domain_error"


class ResourceLimitExceeded(EgyptianError):
    """A search exhausted its node budget."""

    exit_code = 3
    default_detail = "Search node budget exceeded"
    default_code = "resource_limit"

    def __init__(self, nodes: int, budget: int, detail: str | None = None) -> None:
        self.nodes = nodes
        self.budget = budget
        super().__init__(detail or f"Search aborted after {nodes} nodes (budget {budget})")

    def as_context(self) -> dict[str, Any]:
        """Structured fields attached to log records."""
        return {**super().as_context(), "nodes": self.nodes, "budget": self.budget}


class TransitionError(EgyptianError):
    """No automaton rule matches a (state, n, order) triple."""

    default_detail = "No automaton transition matches"
    default_code = "transition_error"

    def __init__(self, state: int, n: int, order: str, detail: str | None = None) -> None:
        self.state = state
        self.n = n
        self.order = order
        super().__init__(detail or f"No transition for state={state}, n={n}, order={order}")

    def as_context(self) -> dict[str, Any]:
        """Structured fields attached to log records."""
        return {**super().as_context(), "state": self.state, "n": self.n, "order": self.order}


class InvariantViolation(EgyptianError):
    """An internal consistency check failed; signals a bug rather than bad input."""

    default_detail = "Internal invariant violated"
    default_code = "invariant_violation"
