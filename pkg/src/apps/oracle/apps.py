"""App configuration for brute-force verification oracles."""

from django.apps import AppConfig


class OracleConfig(AppConfig):
    """App configuration for the oracle app."""

    name = "src.apps.oracle"
