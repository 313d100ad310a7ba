"""App configuration for validation, p-adic checks, structures and expansions."""

from django.apps import AppConfig


class AnalysisConfig(AppConfig):
    """App configuration for the analysis app."""

    name = "src.apps.analysis"
