"""App configuration for recurrence counts, node counts and depth bounds."""

from django.apps import AppConfig


class RecurrenceConfig(AppConfig):
    """App configuration for the recurrence app."""

    name = "src.apps.recurrence"
