"""Transition lookup over the guard table."""

from src.apps.automaton.models import AutomatonState, Order
from src.apps.automaton.schemas.rules import LEAF, Leaf, Transition, TransitionRule
from src.apps.automaton.services.table import TRANSITION_TABLE
from src.apps.shared.exceptions import TransitionError


MIN_UNKNOWNS = 4


def find_rule(state: AutomatonState, n: int, order: Order) -> TransitionRule:
    """Return the first rule whose guard matches the triple.

    Raises:
        TransitionError: If the order cannot run in ``state``, ``n`` is below 4 or no guard matches.
    """
    if order.home_state != state:
        raise TransitionError(state, n, order.label, detail=f"{order.label} is not an order of state {state.label}")
    if n < MIN_UNKNOWNS:
        raise TransitionError(state, n, order.label)

    for rule in TRANSITION_TABLE:
        if rule.guard.matches(state, n, order):
            return rule

    raise TransitionError(state, n, order.label)


def transitions(state: AutomatonState, n: int, order: Order) -> Leaf | tuple[Transition, ...]:
    """Children of a triple, or :data:`LEAF` for a terminal case.

    Example:
        >>> transitions(AutomatonState.ONE, 5, Order.SQUARE)
        (Transition(state=<AutomatonState.TWO: 2>, n=4, order=<Order.ASTERISK: 'asterisk'>),)
    """
    rule = find_rule(state, n, order)
    if rule.is_leaf:
        return LEAF
    return tuple(child.target(n) for child in rule.children)
