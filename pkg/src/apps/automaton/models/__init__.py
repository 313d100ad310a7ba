"""Choice enums for the automaton app (no database tables)."""

from src.apps.automaton.models.orders import TOP_LEVEL_ORDERS, AutomatonState, Order


__all__ = ["TOP_LEVEL_ORDERS", "AutomatonState", "Order"]
