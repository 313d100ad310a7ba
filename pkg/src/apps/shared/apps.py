"""App configuration for the shared app."""

from django.apps import AppConfig


class SharedConfig(AppConfig):
    """Exceptions, the command error handler and logging helpers used by every solver app."""

    name = "src.apps.shared"
