"""App configuration for the command-line surface."""

from django.apps import AppConfig


class CliConfig(AppConfig):
    """App configuration for the cli app."""

    name = "src.apps.cli"
