import pytest

from src.apps.families.services.families import family_U, family_V, family_Z1
from src.apps.shared.exceptions import DomainError


def test_family_u_at_nine():
    assert family_U(9).values == (2, 4, 5, 25, 125, 625, 3125, 15625, 62500)


def test_family_v_at_nine():
    assert family_V(9).values == (2, 4, 7, 14, 49, 98, 343, 686, 1372)


def test_family_v_has_no_even_member():
    with pytest.raises(DomainError) as excinfo:
        family_V(10)
    assert excinfo.value.code == "no_solution"


def test_family_z1_is_the_first_enumerated_solution(golden_lines):
    assert family_Z1(9).as_braces() == golden_lines("enumeration_n9.txt")[0]


@pytest.mark.parametrize("n", range(9, 26))
def test_families_are_exact(n):
    assert family_U(n).is_exact()
    assert family_U(n).n == n
    assert family_Z1(n).is_exact()
    if n % 2:
        assert family_V(n).is_exact()
        assert family_V(n).n == n


@pytest.mark.parametrize("family", [family_U, family_V, family_Z1])
def test_families_start_at_nine(family):
    with pytest.raises(DomainError):
        family(8)
