"""Exception handler turning service failures into command errors with exit codes."""

import logging
import uuid

from typing import Any

from django.core.management import CommandError

from src.apps.shared.exceptions.base import EgyptianError


logger = logging.getLogger(__name__)


def command_exception_handler(exc: Exception, context: dict[str, Any]) -> CommandError:
    """Standardise a failure raised while a management command runs.

    Args:
        exc: The exception raised by the service layer.
        context: Command name and parsed options, attached to the log record.

    Returns:
        CommandError: Carries the message (prefixed with an error id) and the exit code.
    """
    if isinstance(exc, CommandError):
        return exc

    # Unique error identifier for tracking
    error_id: str = str(uuid.uuid4())[:8]

    log_exception(exc, context, error_id)

    if isinstance(exc, EgyptianError):
        return CommandError(f"[{error_id}] {exc.code}: {exc.detail}", returncode=exc.exit_code)

    return CommandError(f"[{error_id}] unexpected error: {exc}", returncode=1)


def log_exception(exc: Exception, context: dict[str, Any], error_id: str) -> None:
    """Log an exception with its command context."""
    log_context = {
        "error_id": error_id,
        "command": context.get("command"),
        "options": context.get("options"),
        "exception_type": type(exc).__name__,
    }

    if isinstance(exc, EgyptianError):
        log_context.update(exc.as_context())
        logger.warning("Command failed [%s]: %s", error_id, exc.detail, extra=log_context)
    else:
        logger.exception("Unexpected error [%s]: %s", error_id, exc, extra=log_context)
