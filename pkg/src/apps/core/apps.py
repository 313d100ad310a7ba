"""App configuration for exact arithmetic and shared value types."""

from django.apps import AppConfig


class CoreConfig(AppConfig):
    """App configuration for the core app."""

    name = "src.apps.core"
