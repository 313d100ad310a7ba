"""Egyptian-fraction expansions: greedy splitting and the two splitting identities."""

import logging
import math

from collections.abc import Iterator
from fractions import Fraction

from src.apps.analysis.models import IdentityKind
from src.apps.analysis.services.validation import validate_solution
from src.apps.core.schemas.values import SolutionSet
from src.apps.shared.exceptions import DomainError, InvariantViolation


logger = logging.getLogger(__name__)


def greedy_expand(r: Fraction) -> list[int]:
    """Greedy expansion of 0 < r <= 1: repeatedly take the largest unit fraction not exceeding r.

    Numerators strictly decrease, so the loop ends.

    Example:
        >>> greedy_expand(Fraction(4, 5))
        [2, 4, 20]

    Raises:
        DomainError: If ``r`` is outside (0, 1].
    """
    if not 0 < r <= 1:
        raise DomainError(f"{r} is outside (0, 1]", code="out_of_range")

    denominators = []
    remaining = Fraction(r)
    while remaining:
        unit = math.ceil(remaining.denominator / remaining.numerator)
        denominators.append(unit)
        remaining -= Fraction(1, unit)
    return denominators


def identity_expand(x: int, which: IdentityKind | str) -> list[int]:
    """Split 1/x with one of the identities.

    four-term: [5x/4, 10x, 15x, 30x] (4 | x). two-term: [3x/2, 3x] (2 | x).

    Raises:
        DomainError: If ``x`` misses the divisibility condition.
    """
    which = IdentityKind(which)
    if x < 1:
        raise DomainError(f"{x} is not a positive integer")

    match which:
        case IdentityKind.FOUR_TERM:
            if x % 4:
                raise DomainError(f"the four-term identity needs 4 | x, got {x}", code="not_divisible")
            return [5 * x // 4, 10 * x, 15 * x, 30 * x]
        case IdentityKind.TWO_TERM:
            if x % 2:
                raise DomainError(f"the two-term identity needs 2 | x, got {x}", code="not_divisible")
            return [3 * x // 2, 3 * x]


def expand_solution(solution: SolutionSet, index: int, which: IdentityKind | str) -> SolutionSet:
    """Replace ``solution.values[index]`` by its identity expansion, in place of the original term.

    Raises:
        DomainError: If ``index`` is out of range or the term misses the divisibility condition.
    """
    if not 0 <= index < solution.n:
        raise DomainError(f"index {index} outside 0..{solution.n - 1}", code="invalid_index")
    values = solution.values
    expanded = (*values[:index], *identity_expand(values[index], which), *values[index + 1 :])
    return SolutionSet(values=expanded, prime=None, distinct=solution.distinct)


def iter_expansions(solution: SolutionSet, which: IdentityKind | str) -> Iterator[SolutionSet]:
    """Every single-step expansion of ``solution`` that validates.

    Terms missing the divisibility condition are skipped, and so are expansions that would repeat a
    denominator of a distinct solution.

    Raises:
        InvariantViolation: If an expansion changes the reciprocal sum.
    """
    which = IdentityKind(which)
    divisor = 4 if which == IdentityKind.FOUR_TERM else 2
    for index, x in enumerate(solution.values):
        if x % divisor:
            continue
        expanded = expand_solution(solution, index, which)
        report = validate_solution(expanded)
        if not report.sum_is_one:
            raise InvariantViolation(f"expanding {x} broke the sum: {report.reciprocal_sum}", code="expansion_sum")
        if not report.passed:
            logger.debug("Skipping expansion of %d in %s: %s", x, solution.as_braces(), report.failures)
            continue
        yield expanded
