"""App configuration for explicit solution enumeration."""

from django.apps import AppConfig


class EnumeratorConfig(AppConfig):
    """App configuration for the enumerator app."""

    name = "src.apps.enumerator"
