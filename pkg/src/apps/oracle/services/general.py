"""Unrestricted solutions of 1/x_1 + ... + 1/x_n = 1 for small n."""

import logging
import math

from fractions import Fraction

from django.conf import settings

from src.apps.core.schemas.values import SolutionSet
from src.apps.shared.exceptions import DomainError, ResourceLimitExceeded
from src.apps.shared.utils.humanization import humanize_count


logger = logging.getLogger(__name__)


def general_enumerate(n: int, *, distinct: bool = False) -> list[SolutionSet]:
    """All solutions with x_1 <= ... <= x_n (strictly increasing when ``distinct``).

    With k slots left and remainder r, the next value x satisfies 1/x < r (or = r on the last slot)
    and k/x >= r.

    Example:
        >>> [s.values for s in general_enumerate(3)]
        [(2, 3, 6), (2, 4, 4), (3, 3, 3)]

    Raises:
        DomainError: If ``n < 1`` or ``n`` exceeds ``GENERAL_ENUMERATION_MAX_N``.
        ResourceLimitExceeded: If the search exceeds ``ORACLE_NODE_BUDGET`` nodes.
    """
    limit = settings.EGYPTIAN_SEARCH["GENERAL_ENUMERATION_MAX_N"]
    if not 1 <= n <= limit:
        raise DomainError(f"general enumeration needs 1 <= n <= {limit}, got {n}", code="n_out_of_range")

    budget = settings.EGYPTIAN_SEARCH["ORACLE_NODE_BUDGET"]
    nodes = 0
    found: list[tuple[int, ...]] = []

    def extend(remaining: Fraction, chosen: tuple[int, ...]) -> None:
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            raise ResourceLimitExceeded(nodes, budget)

        slots = n - len(chosen)
        floor = chosen[-1] + distinct if chosen else 1
        if slots == 1:
            if remaining.numerator == 1 and remaining.denominator >= floor:
                found.append((*chosen, remaining.denominator))
            return

        low = max(floor, math.floor(1 / remaining) + 1)
        high = math.floor(slots / remaining)
        for x in range(low, high + 1):
            extend(remaining - Fraction(1, x), (*chosen, x))

    extend(Fraction(1), ())
    logger.info("General enumeration n=%d distinct=%s: %s solutions", n, distinct, humanize_count(len(found)))
    return [SolutionSet(values=values, prime=None, distinct=distinct) for values in found]
