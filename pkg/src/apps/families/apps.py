"""App configuration for closed-form families and the labelled solution catalog."""

from django.apps import AppConfig


class FamiliesConfig(AppConfig):
    """App configuration for the families app."""

    name = "src.apps.families"
