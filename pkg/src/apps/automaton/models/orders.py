"""Automaton states and orders."""

from django.db import models


class AutomatonState(models.IntegerChoices):
    """Shape of the solution suffix carrying the highest 3-valuation.

    ONE: the suffix ends {3^a, 2*3^a}; TWO: it ends {2*3^a, 4*3^a}.
    """

    ONE = 1, "One"
    TWO = 2, "Two"


class Order(models.TextChoices):
    """The nine automaton moves, each consuming a fixed number of unknowns."""

    TRIANGLE = "triangle", "Triangle"
    SQUARE = "square", "Square"
    ASTERISK = "asterisk", "Asterisk"
    DIAMOND = "diamond", "Diamond"
    STARONE = "starone", "Starone"
    STARTWO = "startwo", "Startwo"
    STARTHREE = "starthree", "Starthree"
    RED_STARTWO = "red_startwo", "RedStartwo"
    RED_STARTHREE = "red_starthree", "RedStarthree"

    @property
    def home_state(self) -> AutomatonState:
        """The only state in which this order may be applied."""
        if self in _STATE_TWO_ORDERS:
            return AutomatonState.TWO
        return AutomatonState.ONE


_STATE_TWO_ORDERS = frozenset({Order.ASTERISK, Order.DIAMOND, Order.RED_STARTWO, Order.RED_STARTHREE})

# Top-level invocations, in output order.
TOP_LEVEL_ORDERS: tuple[tuple[AutomatonState, Order], ...] = (
    (AutomatonState.ONE, Order.TRIANGLE),
    (AutomatonState.ONE, Order.SQUARE),
    (AutomatonState.ONE, Order.STARONE),
    (AutomatonState.ONE, Order.STARTWO),
    (AutomatonState.ONE, Order.STARTHREE),
    (AutomatonState.TWO, Order.ASTERISK),
    (AutomatonState.TWO, Order.DIAMOND),
)
