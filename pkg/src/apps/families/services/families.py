"""Closed-form solution families for q = 3, 5 and 7."""

from src.apps.core.schemas.values import SolutionSet
from src.apps.shared.exceptions import DomainError


MIN_FAMILY_N = 9


def _ensure_family_n(n: int) -> None:
    if n < MIN_FAMILY_N:
        raise DomainError(f"families are defined for n >= {MIN_FAMILY_N}, got {n}", code="n_out_of_range")


def family_U(n: int) -> SolutionSet:  # noqa: N802
    """The unique q=5 solution {2, 4, 5, 5^2, ..., 5^(n-3), 4*5^(n-3)}.

    Example:
        >>> family_U(9).values
        (2, 4, 5, 25, 125, 625, 3125, 15625, 62500)
    """
    _ensure_family_n(n)
    top = n - 3
    values = (2, 4, *(5**k for k in range(1, top + 1)), 4 * 5**top)
    return SolutionSet(values=values, prime=5)


def family_V(n: int) -> SolutionSet:  # noqa: N802
    """The unique q=7 solution, paired powers 7^k, 2*7^k closed by 4*7^m with m = (n-3)/2.

    Raises:
        DomainError: If ``n`` is even; no q=7 solution exists then.
    """
    _ensure_family_n(n)
    if n % 2 == 0:
        raise DomainError(f"there is no q=7 solution for even n={n}", code="no_solution")
    top = (n - 3) // 2
    pairs = [value for k in range(1, top + 1) for value in (7**k, 2 * 7**k)]
    return SolutionSet(values=(2, 4, *pairs, 4 * 7**top), prime=7)


def family_Z1(n: int) -> SolutionSet:  # noqa: N802
    """{2, 3, 3^2, ..., 3^(n-2), 2*3^(n-2)}, the all-Triangle path of the automaton."""
    _ensure_family_n(n)
    top = n - 2
    values = (2, *(3**k for k in range(1, top + 1)), 2 * 3**top)
    return SolutionSet(values=values, prime=3)
