import pytest

from src.apps.analysis.services.validation import validate_solution
from src.apps.automaton.models import AutomatonState, Order
from src.apps.automaton.services.counting import count_total
from src.apps.automaton.services.transitions import find_rule
from src.apps.enumerator.services.enumeration import (
    enumerate_solutions,
    iter_solutions,
    iter_subtree,
    resolve_leaf,
)
from src.apps.shared.exceptions import DomainError, InvariantViolation
from tests.factories import PartialSolutionFactory


@pytest.mark.parametrize("n", [9, 10, 11, 12, 13])
def test_output_is_line_for_line_identical_to_golden(n, golden_lines):
    produced = [solution.as_braces() for solution in enumerate_solutions(n)]
    assert produced == golden_lines(f"enumeration_n{n}.txt")


def test_first_and_last_solutions_at_nine():
    solutions = enumerate_solutions(9)
    assert solutions[0].values == (2, 3, 9, 27, 81, 243, 729, 2187, 4374)
    assert solutions[-1].values == (2, 4, 9, 18, 36, 27, 108, 162, 324)


def test_red_starthree_leaf_emits_an_exact_tail():
    # The n=10 line produced through the Startwo node and the RedStarthree leaf.
    assert (2, 12, 6, 9, 18, 27, 54, 108, 81, 162) in [s.values for s in enumerate_solutions(10)]


@pytest.mark.parametrize("n", range(9, 18))
def test_enumeration_size_matches_count(n):
    assert sum(1 for _ in iter_solutions(n)) == count_total(n)


@pytest.mark.parametrize("n", [9, 10, 11, 12, 13])
def test_every_solution_validates(n):
    for solution in enumerate_solutions(n):
        report = validate_solution(solution, distinct=True, prime=3, max_a=2)
        assert report.passed, report.failures


@pytest.mark.parametrize("n", [9, 12, 15])
def test_highest_three_exponent_is_n_minus_two(n):
    exponents = [max(v for v in (_three_adic(x) for x in s.values)) for s in enumerate_solutions(n)]
    assert max(exponents) == n - 2


def _three_adic(x: int) -> int:
    count = 0
    while x % 3 == 0:
        x //= 3
        count += 1
    return count


def test_all_triangle_path_is_the_only_odd_two_exponent():
    only = [s for s in enumerate_solutions(9) if max(x & -x for x in s.values) == 2]
    assert [s.values for s in only] == [(2, 3, 9, 27, 81, 243, 729, 2187, 4374)]


def test_parallel_enumeration_matches_sequential():
    assert enumerate_solutions(12, threads=4) == enumerate_solutions(12, threads=1)


def test_subtree_sizes_at_nine():
    sizes = [
        sum(1 for _ in iter_subtree(AutomatonState.ONE, 9, Order.TRIANGLE)),
        sum(1 for _ in iter_subtree(AutomatonState.TWO, 9, Order.DIAMOND)),
    ]
    assert sizes == [18, 9]


def test_resolve_leaf_on_a_seeded_partial():
    partial = PartialSolutionFactory.build().extend(
        find_rule(AutomatonState.ONE, 5, Order.TRIANGLE).emission.emissions
    )
    leaf = find_rule(AutomatonState.ONE, 4, Order.TRIANGLE).emission
    assert resolve_leaf(partial.advance(1), leaf).values == (2, 3, 9)


def test_resolve_leaf_rejects_internal_rules():
    rule = find_rule(AutomatonState.ONE, 9, Order.TRIANGLE)
    with pytest.raises(InvariantViolation):
        resolve_leaf(PartialSolutionFactory.build(), rule.emission)


@pytest.mark.parametrize("n", [8, 18])
def test_enumeration_range(n):
    with pytest.raises(DomainError):
        enumerate_solutions(n)
