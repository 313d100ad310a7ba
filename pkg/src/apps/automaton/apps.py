"""App configuration for the decision automaton and leaf counting."""

from django.apps import AppConfig


class AutomatonConfig(AppConfig):
    """App configuration for the automaton app."""

    name = "src.apps.automaton"
