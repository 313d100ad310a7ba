import pytest

from src.apps.recurrence.services.bounds import (
    bounds_diagnostic,
    bounds_report,
    depth_bounds,
    node_count,
    node_count_state,
)
from src.apps.shared.exceptions import DomainError


@pytest.mark.parametrize(
    ("tree", "depth", "expected"),
    [(1, 1, 2), (2, 1, 5), (1, 2, 7), (1, 3, 25), (2, 2, 18)],
)
def test_node_count(tree, depth, expected):
    assert node_count(tree, depth) == expected


def test_node_count_state_recurrence_step():
    state = node_count_state(1, 2)
    assert (state.a2, state.a5, state.a_heart) == (1, 1, 0)


def test_node_count_domain():
    with pytest.raises(DomainError):
        node_count(3, 1)
    with pytest.raises(DomainError):
        node_count(1, 0)


@pytest.mark.parametrize(("n", "depths"), [(9, (3, 2)), (10, (2, 2)), (11, (3, 2)), (12, (3, 3)), (13, (3, 2))])
def test_minimal_depths_per_residue(n, depths):
    bounds = depth_bounds(n)
    assert (bounds.d1_min, bounds.d2_min) == depths
    assert bounds.d_max == n - 3


def test_bounds_at_nine():
    bounds = depth_bounds(9)
    assert bounds.lower == 43
    assert bounds.upper == 4425
    assert depth_bounds(9, d_max=5).upper == 1212


def test_diagnostic_at_nine():
    diagnostic = bounds_diagnostic(9)
    assert diagnostic.count == 52
    assert diagnostic.status == "holds"
    assert diagnostic.as_line() == "n=9 d_min=(3,2) lower=43 count=52 upper(n-3)=4425 upper(n-4)=1212 holds"


def test_report_over_the_checked_range():
    report = bounds_report(9, 25)
    assert [d.n for d in report] == list(range(9, 26))
    assert all(d.status == "holds" for d in report)


def test_bounds_domain():
    with pytest.raises(DomainError):
        depth_bounds(8)
