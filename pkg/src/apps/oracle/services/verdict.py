"""Cross-check oracle output against the constructive producers."""

from collections.abc import Iterable

from src.apps.core.schemas.values import SolutionSet
from src.apps.enumerator.services.enumeration import enumerate_solutions
from src.apps.families.services.families import family_U, family_V
from src.apps.oracle.schemas.search import OracleVerdict
from src.apps.oracle.services.restricted import default_exponent_cap


def reference_solutions(n: int, q: int) -> list[SolutionSet]:
    """What the constructive side says the (n, q) solutions are.

    q=3 uses the enumerator, q=5 the U family, q=7 the V family (none for even n). No other odd
    prime admits a distinct solution.
    """
    match q:
        case 3:
            return enumerate_solutions(n)
        case 5:
            return [family_U(n)]
        case 7:
            return [family_V(n)] if n % 2 else []
        case _:
            return []


def _keys(solutions: Iterable[SolutionSet]) -> set[tuple[int, ...]]:
    return {solution.sorted_values() for solution in solutions}


def compare_with_reference(n: int, q: int, found: Iterable[SolutionSet], cap: int | None = None) -> OracleVerdict:
    """Compare ``found`` with :func:`reference_solutions` as unordered families of sets."""
    found_keys = _keys(found)
    reference_keys = _keys(reference_solutions(n, q))
    return OracleVerdict(
        n=n,
        q=q,
        cap=default_exponent_cap(n, q) if cap is None else cap,
        found=[list(key) for key in sorted(found_keys)],
        reference=[list(key) for key in sorted(reference_keys)],
        missing=[list(key) for key in sorted(reference_keys - found_keys)],
        extra=[list(key) for key in sorted(found_keys - reference_keys)],
    )
