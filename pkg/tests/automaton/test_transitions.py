import pytest

from src.apps.automaton.models import TOP_LEVEL_ORDERS, AutomatonState, Order
from src.apps.automaton.schemas.rules import LEAF, Transition
from src.apps.automaton.services.table import TRANSITION_TABLE
from src.apps.automaton.services.transitions import find_rule, transitions
from src.apps.shared.exceptions import TransitionError


ONE, TWO = AutomatonState.ONE, AutomatonState.TWO


def test_home_states():
    assert Order.ASTERISK.home_state == TWO
    assert Order.RED_STARTHREE.home_state == TWO
    assert Order.TRIANGLE.home_state == ONE
    assert Order.STARTHREE.home_state == ONE


def test_top_level_sequence():
    assert [order for _, order in TOP_LEVEL_ORDERS] == [
        Order.TRIANGLE,
        Order.SQUARE,
        Order.STARONE,
        Order.STARTWO,
        Order.STARTHREE,
        Order.ASTERISK,
        Order.DIAMOND,
    ]


def test_table_size():
    assert len(TRANSITION_TABLE) == 34


@pytest.mark.parametrize("state", [ONE, TWO])
def test_four_unknowns_is_a_leaf_for_every_order(state):
    orders = [order for order in Order if order.home_state == state]
    for order in orders:
        assert transitions(state, 4, order) is LEAF


def test_square_at_five_goes_to_asterisk():
    assert transitions(ONE, 5, Order.SQUARE) == (Transition(state=TWO, n=4, order=Order.ASTERISK),)


def test_triangle_above_seven_fans_out_to_all_state_one_orders():
    children = transitions(ONE, 12, Order.TRIANGLE)
    assert [child.order for child in children] == [
        Order.TRIANGLE,
        Order.SQUARE,
        Order.STARONE,
        Order.STARTWO,
        Order.STARTHREE,
    ]
    assert {child.n for child in children} == {11}


def test_triangle_at_eight_uses_the_earlier_rule():
    children = transitions(ONE, 8, Order.TRIANGLE)
    assert [child.order for child in children] == [Order.TRIANGLE, Order.SQUARE, Order.STARONE]


def test_startwo_above_nine_has_four_children():
    children = transitions(ONE, 15, Order.STARTWO)
    assert [(child.state, child.n, child.order) for child in children] == [
        (TWO, 10, Order.ASTERISK),
        (TWO, 10, Order.DIAMOND),
        (TWO, 10, Order.RED_STARTWO),
        (TWO, 10, Order.RED_STARTHREE),
    ]


def test_leaf_rules_carry_their_offsets():
    assert find_rule(ONE, 4, Order.TRIANGLE).emission.resolution_offset == 1
    assert find_rule(TWO, 4, Order.DIAMOND).emission.resolution_offset == 0
    assert find_rule(ONE, 9, Order.STARTHREE).emission.resolution_offset == 3


def test_below_four_unknowns_is_an_error():
    with pytest.raises(TransitionError) as exc_info:
        find_rule(ONE, 3, Order.TRIANGLE)
    assert exc_info.value.n == 3


def test_order_outside_its_state_is_an_error():
    with pytest.raises(TransitionError):
        find_rule(ONE, 9, Order.ASTERISK)


def test_unmatched_small_case_is_an_error():
    # Starone has no case at n=5.
    with pytest.raises(TransitionError):
        find_rule(ONE, 5, Order.STARONE)


def test_every_child_runs_in_its_home_state():
    for rule in TRANSITION_TABLE:
        for child in rule.children:
            assert child.order.home_state == child.state
