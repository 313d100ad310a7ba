"""The transition table, with each rule's emissions alongside.

Rules are tried top to bottom and the first match wins, so overlapping guards (Triangle at n=8 is
covered by both ``n=7|8`` and ``n>7``) resolve by position. Do not reorder.

Emission notation: ``_lit(v)`` is the literal v; ``_d(c, k)`` is c*3^(A - tag) with tag = counter + k,
where A is the highest 3-exponent fixed at the leaf.
"""

from collections.abc import Iterable

from src.apps.automaton.models import AutomatonState, Order
from src.apps.automaton.schemas.rules import (
    ChildStep,
    DeferredEmission,
    EmissionRule,
    Guard,
    LiteralEmission,
    TransitionRule,
)


ONE, TWO = AutomatonState.ONE, AutomatonState.TWO
TRI, SQ, AST, DIA = Order.TRIANGLE, Order.SQUARE, Order.ASTERISK, Order.DIAMOND
ST1, ST2, ST3 = Order.STARONE, Order.STARTWO, Order.STARTHREE
RS2, RS3 = Order.RED_STARTWO, Order.RED_STARTHREE

type Condition = int | tuple[int, ...] | str


def _lit(value: int) -> LiteralEmission:
    return LiteralEmission(value=value)


def _d(coef: int, delta: int = 0) -> DeferredEmission:
    return DeferredEmission(coef=coef, delta=delta)  # type: ignore[arg-type]


def _guard(state: AutomatonState, order: Order | None, condition: Condition) -> Guard:
    if isinstance(condition, str):
        return Guard(state=state, order=order, above=int(condition.removeprefix(">")))
    values = (condition,) if isinstance(condition, int) else condition
    return Guard(state=state, order=order, values=frozenset(values))


def _fan(state: AutomatonState, step: int, orders: Iterable[Order], increment: int) -> tuple[ChildStep, ...]:
    return tuple(ChildStep(state=state, step=step, order=order, counter_increment=increment) for order in orders)


def _leaf(
    state: AutomatonState,
    order: Order | None,
    condition: Condition,
    emissions: tuple[LiteralEmission | DeferredEmission, ...],
    offset: int,
) -> TransitionRule:
    return TransitionRule(
        guard=_guard(state, order, condition),
        emission=EmissionRule(emissions=emissions, resolution_offset=offset),
    )


def _node(
    state: AutomatonState,
    order: Order,
    condition: Condition,
    emissions: tuple[LiteralEmission | DeferredEmission, ...],
    children: tuple[ChildStep, ...],
) -> TransitionRule:
    return TransitionRule(
        guard=_guard(state, order, condition),
        emission=EmissionRule(emissions=emissions),
        children=children,
    )


STATE_ONE_FAN = (TRI, SQ, ST1, ST2, ST3)

TRANSITION_TABLE: tuple[TransitionRule, ...] = (
    _leaf(ONE, None, 4, (_lit(2), _lit(3)), offset=1),
    _leaf(TWO, None, 4, (_lit(2), _lit(4)), offset=0),
    _node(ONE, TRI, 5, (_d(1),), _fan(ONE, 1, [TRI], 1)),
    _node(ONE, SQ, 5, (_d(4),), _fan(TWO, 1, [AST], 1)),
    _node(TWO, AST, 5, (_d(2),), _fan(TWO, 1, [AST], 1)),
    _leaf(TWO, DIA, 5, (_lit(2), _d(1), _d(4)), offset=1),
    _leaf(TWO, RS2, 5, (_lit(4), _d(1), _d(2)), offset=1),
    # Same total as the RedStartwo leaf above: 1/2 + 1/12 + 1/6 = 1/4 + 1/3 + 1/6.
    _leaf(TWO, RS3, 5, (_lit(2), _d(4), _d(2)), offset=1),
    _node(TWO, DIA, 6, (_d(1), _d(4)), _fan(ONE, 2, [TRI], 1)),
    _leaf(ONE, ST1, 6, (_lit(4), _d(1), _d(2), _d(4)), offset=1),
    _leaf(TWO, RS2, 6, (_lit(2), _lit(4), _d(1), _d(2)), offset=2),
    _node(TWO, RS3, 6, (_d(2), _d(4)), _fan(ONE, 2, [TRI], 1)),
    _node(ONE, TRI, 6, (_d(1),), _fan(ONE, 1, [TRI, SQ], 1)),
    _node(TWO, DIA, 7, (_d(1), _d(4)), _fan(ONE, 2, [TRI, SQ], 1)),
    _leaf(ONE, ST1, 7, (_lit(2), _lit(4), _d(1), _d(2), _d(4)), offset=2),
    _node(TWO, RS3, 7, (_d(2), _d(4)), _fan(ONE, 2, [TRI, SQ], 1)),
    _node(ONE, TRI, (7, 8), (_d(1),), _fan(ONE, 1, [TRI, SQ, ST1], 1)),
    _leaf(ONE, ST2, 8, (_lit(4), _d(1, 1), _d(2, 1), _d(1), _d(2), _d(4)), offset=2),
    _leaf(ONE, ST3, 8, (_lit(2), _d(2, 1), _d(4, 1), _d(1), _d(2), _d(4)), offset=2),
    _node(TWO, DIA, (8, 9), (_d(1), _d(4)), _fan(ONE, 2, [TRI, SQ, ST1], 1)),
    _node(TWO, RS3, (8, 9), (_d(2), _d(4)), _fan(ONE, 2, [TRI, SQ, ST1], 1)),
    _leaf(ONE, ST2, 9, (_lit(2), _lit(4), _d(1, 1), _d(2, 1), _d(1), _d(2), _d(4)), offset=3),
    _leaf(ONE, ST3, 9, (_lit(2), _lit(3), _d(2, 1), _d(4, 1), _d(1), _d(2), _d(4)), offset=3),
    _node(ONE, ST3, 10, (_d(2, 1), _d(4, 1), _d(1), _d(2), _d(4)), _fan(ONE, 5, [TRI, SQ], 2)),
    _node(ONE, ST3, (11, 12), (_d(2, 1), _d(4, 1), _d(1), _d(2), _d(4)), _fan(ONE, 5, [TRI, SQ, ST1], 2)),
    _node(ONE, TRI, ">7", (_d(1),), _fan(ONE, 1, STATE_ONE_FAN, 1)),
    _node(TWO, AST, ">5", (_d(2),), _fan(TWO, 1, [AST, DIA], 1)),
    _node(TWO, DIA, ">9", (_d(1), _d(4)), _fan(ONE, 2, STATE_ONE_FAN, 1)),
    _node(ONE, SQ, ">5", (_d(4),), _fan(TWO, 1, [AST, DIA], 1)),
    _node(ONE, ST1, ">7", (_d(1), _d(2), _d(4)), _fan(TWO, 3, [AST, DIA], 2)),
    _node(
        ONE,
        ST2,
        ">9",
        (_d(1, 1), _d(2, 1), _d(1), _d(2), _d(4)),
        _fan(TWO, 5, [AST, DIA], 3) + _fan(TWO, 5, [RS2, RS3], 2),
    ),
    _node(ONE, ST3, ">12", (_d(2, 1), _d(4, 1), _d(1), _d(2), _d(4)), _fan(ONE, 5, STATE_ONE_FAN, 2)),
    _node(TWO, RS2, ">6", (_d(1), _d(2)), _fan(TWO, 2, [AST, DIA], 2) + _fan(TWO, 2, [RS2, RS3], 1)),
    _node(TWO, RS3, ">9", (_d(2), _d(4)), _fan(ONE, 2, STATE_ONE_FAN, 1)),
)

# Seeds of the two trees: the pair carrying the highest 3-valuation, tagged 0.
ROOT_SEEDS: dict[AutomatonState, tuple[DeferredEmission, ...]] = {
    ONE: (_d(1), _d(2)),
    TWO: (_d(2), _d(4)),
}
