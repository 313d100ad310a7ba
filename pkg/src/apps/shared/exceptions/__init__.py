from src.apps.shared.exceptions.base import (
    DomainError,
    EgyptianError,
    InvariantViolation,
    ResourceLimitExceeded,
    TransitionError,
)


__all__ = [
    "DomainError",
    "EgyptianError",
    "InvariantViolation",
    "ResourceLimitExceeded",
    "TransitionError",
]
