from fractions import Fraction

import pytest

from src.apps.analysis.models import IdentityKind
from src.apps.analysis.services.expansions import expand_solution, greedy_expand, identity_expand, iter_expansions
from src.apps.analysis.services.validation import validate_solution
from src.apps.families.services.families import family_Z1
from src.apps.shared.exceptions import DomainError
from tests.factories import SolutionSetFactory


@pytest.mark.parametrize(
    ("r", "expected"),
    [(Fraction(4, 5), [2, 4, 20]), (Fraction(2, 3), [2, 6]), (Fraction(1), [1]), (Fraction(1, 7), [7])],
)
def test_greedy(r, expected):
    assert greedy_expand(r) == expected


@pytest.mark.parametrize("r", [Fraction(0), Fraction(3, 2), Fraction(-1, 2)])
def test_greedy_domain(r):
    with pytest.raises(DomainError):
        greedy_expand(r)


def test_identities():
    assert identity_expand(4, IdentityKind.FOUR_TERM) == [5, 40, 60, 120]
    assert identity_expand(2, "two-term") == [3, 6]
    with pytest.raises(DomainError):
        identity_expand(6, IdentityKind.FOUR_TERM)
    with pytest.raises(DomainError):
        identity_expand(3, IdentityKind.TWO_TERM)


def test_expand_in_place():
    solution = SolutionSetFactory(values=(2, 4, 4), prime=None, distinct=False)
    expanded = expand_solution(solution, 1, IdentityKind.FOUR_TERM)
    assert expanded.values == (2, 5, 40, 60, 120, 4)
    assert expanded.is_exact()


def test_expand_index_out_of_range():
    with pytest.raises(DomainError):
        expand_solution(SolutionSetFactory(), 3, IdentityKind.TWO_TERM)


def test_iter_expansions_skips_repeated_denominators():
    expansions = list(iter_expansions(family_Z1(9), IdentityKind.TWO_TERM))
    assert len(expansions) == 1
    assert expansions[0].values[-2:] == (6561, 13122)
    assert expansions[0].n == 10


def test_repeated_expansions_stay_solutions():
    level = [SolutionSetFactory(values=(2, 4, 4), prime=None, distinct=False)]
    for depth in range(1, 4):
        level = [
            expanded
            for solution in level
            for which in IdentityKind
            for expanded in iter_expansions(solution, which)
        ]
        assert level
        assert all(solution.is_exact() and solution.n > 3 for solution in level)
        assert all(validate_solution(solution).passed for solution in level), depth
