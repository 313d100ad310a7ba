import pytest

from src.apps.oracle.services.general import general_enumerate
from src.apps.shared.exceptions import DomainError, ResourceLimitExceeded


@pytest.mark.parametrize(("n", "count"), [(1, 1), (2, 1), (3, 3), (4, 14), (5, 147)])
def test_counts_with_repeats(n, count):
    assert len(general_enumerate(n)) == count


@pytest.mark.slow
def test_count_at_six():
    assert len(general_enumerate(6)) == 3462


def test_three_terms():
    assert [s.values for s in general_enumerate(3)] == [(2, 3, 6), (2, 4, 4), (3, 3, 3)]


def test_distinct_solutions():
    assert [s.values for s in general_enumerate(3, distinct=True)] == [(2, 3, 6)]
    four = general_enumerate(4, distinct=True)
    assert len(four) == 6
    assert all(s.is_exact() and len(set(s.values)) == 4 for s in four)


@pytest.mark.parametrize("n", [0, 8])
def test_domain(n):
    with pytest.raises(DomainError):
        general_enumerate(n)


def test_budget(settings):
    settings.EGYPTIAN_SEARCH = {**settings.EGYPTIAN_SEARCH, "ORACLE_NODE_BUDGET": 5}
    with pytest.raises(ResourceLimitExceeded):
        general_enumerate(5)
