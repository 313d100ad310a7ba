import pytest

from src.apps.analysis.services.padic import padic_check, padic_profile, padic_report
from src.apps.core.schemas.values import SolutionSet
from src.apps.enumerator.services.enumeration import enumerate_solutions
from src.apps.families.services.catalog import burshtein_solutions, catalog_theorem1
from src.apps.families.services.families import family_U, family_V, family_Z1
from src.apps.oracle.services.restricted import restricted_brute_force
from src.apps.shared.exceptions import DomainError


def test_profile_of_the_triangle_path():
    profile = padic_profile(family_Z1(9), 3)
    assert (profile.alpha, profile.s, profile.runner_up) == (7, 2, 6)
    assert profile.occurrences == (7, 8)
    assert profile.cofactors == (1, 2)


def test_exact_divisibility_when_the_runner_up_is_unique():
    check = padic_check(family_Z1(9), 3)
    assert check.cofactor_exact is True
    assert check.passed


def test_even_occurrences_enforced_for_nine_distinct_terms():
    check = padic_check(family_Z1(9), 2)
    assert check.even_occurrences_enforced
    assert check.even_occurrences
    assert not padic_check(SolutionSet(values=(2, 3, 6)), 2).even_occurrences_enforced


def test_prime_absent_from_the_solution():
    check = padic_check(SolutionSet(values=(2, 3, 6)), 5)
    assert check.profile.alpha == 0
    assert check.passed


def test_single_top_power_fails():
    check = padic_check(SolutionSet(values=(2, 3, 7)), 7)
    assert not check.at_least_twice
    assert not check.passed


def test_rejects_composite():
    with pytest.raises(DomainError):
        padic_profile(SolutionSet(values=(2, 3, 6)), 4)


@pytest.mark.parametrize("n", [9, 10, 11, 12, 13])
def test_every_enumerated_solution_passes(n):
    assert all(padic_report(solution).passed for solution in enumerate_solutions(n))


@pytest.mark.parametrize("n", range(9, 16))
def test_families_pass(n):
    families = [family_U(n), family_Z1(n)]
    if n % 2:
        families.append(family_V(n))
    for solution in families:
        assert padic_report(solution).passed, solution.as_braces()


@pytest.mark.parametrize(("n", "q"), [(10, 3), (11, 3), (10, 5), (11, 7)])
def test_oracle_solutions_pass(n, q):
    found = restricted_brute_force(n, q)
    assert found
    assert all(padic_report(solution).passed for solution in found)


def test_catalogued_solutions_pass():
    for catalog in (catalog_theorem1(), burshtein_solutions()):
        for entry in catalog.entries:
            report = padic_report(entry.solution)
            assert report.passed, entry.label


def test_report_covers_each_prime():
    report = padic_report(burshtein_solutions().get("B_1").solution)
    assert [check.profile.p for check in report.checks] == [3, 5, 7, 11]
