import pytest

from src.apps.automaton.models import AutomatonState, Order
from src.apps.automaton.services.counting import count_by_order, count_leaves, count_total
from src.apps.recurrence.services.recurrence import count_vector, recurrence_total, theorem2_total
from src.apps.shared.exceptions import DomainError


def test_initial_conditions():
    assert count_vector(3).as_tuple() == (1, 0, 0, 0, 0, 0, 0, 0, 0)
    vector = count_vector(4)
    assert (vector.tri, vector.ast) == (1, 1)
    assert vector.as_tuple()[1:] == (0, 1, 0, 0, 0, 0, 0, 0)


@pytest.mark.parametrize(
    ("n", "expected"),
    [
        (9, (18, 10, 10, 9, 3, 1, 1, 11, 9)),
        (10, (33, 19, 19, 18, 5, 4, 2, 20, 18)),
        (13, (229, 133, 133, 120, 37, 20, 18, 142, 120)),
        (35, (330140577, 191442225, 191442225, 173287025, 52743872, 29586769, 25059215, 204595521, 173287025)),
    ],
)
def test_count_vector(n, expected):
    assert count_vector(n).as_tuple() == expected


def test_recurrence_totals():
    assert recurrence_total(35) == 993701908
    assert recurrence_total(9) == 52
    assert recurrence_total(13) == 690


@pytest.mark.parametrize(("n", "expected"), [(9, 54), (10, 101), (11, 192), (12, 363), (13, 692), (14, 1315)])
def test_theorem2_totals(n, expected):
    assert theorem2_total(n) == expected


@pytest.mark.parametrize("n", range(9, 26))
def test_components_match_the_automaton(n):
    vector = count_vector(n)
    assert vector.by_order() == count_by_order(n)
    assert vector.t == count_leaves(AutomatonState.TWO, n, Order.RED_STARTWO)
    assert vector.p == count_leaves(AutomatonState.TWO, n, Order.RED_STARTHREE)


@pytest.mark.parametrize("n", range(9, 31))
def test_totals_match_the_automaton(n):
    assert recurrence_total(n) == count_total(n)


def test_domain_errors():
    with pytest.raises(DomainError):
        count_vector(2)
    with pytest.raises(DomainError):
        recurrence_total(8)
