"""Exhaustive search for distinct 2^a*q^b solutions, independent of the automaton.

Reciprocals are scaled to integers: with L = 2^max_a * q^B every candidate x has weight L/x and a
solution is an n-subset whose weights sum to L. Candidates are taken in ascending order (weights
descending), so the heaviest and lightest completions of a partial choice are prefix and suffix
sums of the weight list.
"""

import itertools
import logging
import time

from django.conf import settings

from src.apps.core.schemas.values import SolutionSet
from src.apps.core.services.arithmetic import is_odd_prime
from src.apps.oracle.schemas.search import CandidatePool
from src.apps.shared.exceptions import DomainError, ResourceLimitExceeded
from src.apps.shared.utils.humanization import humanize_count, humanize_duration


logger = logging.getLogger(__name__)

MAX_A = 2
MIN_ORACLE_N = 3


def default_exponent_cap(n: int, q: int) -> int:
    """Default cap B on the exponent of q: the largest exponent the known families use, plus one.

    Example:
        >>> default_exponent_cap(9, 7)
        4
    """
    match q:
        case 5:
            return n - 2
        case 7:
            return (n - 3) // 2 + 1
        case _:
            return n - 1


def candidate_pool(q: int, max_b: int, max_a: int = MAX_A) -> CandidatePool:
    """All 2^a*q^b >= 2 with a <= max_a and b <= max_b, ascending."""
    values = sorted(2**a * q**b for a, b in itertools.product(range(max_a + 1), range(max_b + 1)) if a or b)
    return CandidatePool(q=q, max_a=max_a, max_b=max_b, values=tuple(values))


class _SubsetSearch:
    """Depth-first search for n weights summing to a target, with a node budget."""

    def __init__(self, weights: list[int], n: int, target: int, budget: int) -> None:
        self.weights = weights
        self.n = n
        self.target = target
        self.budget = budget
        self.nodes = 0
        self.prefix = [0, *itertools.accumulate(weights)]
        self.position = {w: i for i, w in enumerate(weights)}
        self.found: list[tuple[int, ...]] = []

    def _window(self, start: int, count: int) -> int:
        return self.prefix[start + count] - self.prefix[start]

    def run(self) -> list[tuple[int, ...]]:
        self._extend(0, self.target, ())
        return self.found

    def _extend(self, start: int, remaining: int, chosen: tuple[int, ...]) -> None:
        self.nodes += 1
        if self.nodes > self.budget:
            raise ResourceLimitExceeded(self.nodes, self.budget)

        slots = self.n - len(chosen)
        size = len(self.weights)
        if slots == 1:
            index = self.position.get(remaining)
            if index is not None and index >= start:
                self.found.append((*chosen, index))
            return

        for index in range(start, size - slots + 1):
            # Heaviest completion from here on is the next `slots` weights.
            if self._window(index, slots) < remaining:
                return
            # Lightest completion is the last `slots` weights.
            if self.weights[index] + self._window(size - slots + 1, slots - 1) > remaining:
                continue
            self._extend(index + 1, remaining - self.weights[index], (*chosen, index))


def restricted_brute_force(n: int, q: int, cap: int | None = None) -> list[SolutionSet]:
    """Every set of n distinct 2^a*q^b (a <= 2, b <= cap) whose reciprocals sum to 1.

    Args:
        n: Number of unit fractions, at least 3.
        q: Odd prime.
        cap: Exponent cap B; :func:`default_exponent_cap` when omitted.

    Returns:
        list[SolutionSet]: Solutions with ascending values, in lexicographic order.

    Raises:
        DomainError: If ``n < 3``, ``q`` is not an odd prime or ``cap < 1``.
        ResourceLimitExceeded: If the search visits more nodes than ``ORACLE_NODE_BUDGET``.
    """
    if n < MIN_ORACLE_N:
        raise DomainError(f"the oracle needs n >= {MIN_ORACLE_N}, got {n}", code="n_out_of_range")
    if not is_odd_prime(q):
        raise DomainError(f"{q} is not an odd prime", code="not_odd_prime")
    cap = default_exponent_cap(n, q) if cap is None else cap
    if cap < 1:
        raise DomainError(f"exponent cap must be at least 1, got {cap}", code="invalid_cap")

    pool = candidate_pool(q, cap)
    scale = 2**MAX_A * q**cap
    weights = [scale // x for x in pool.values]
    budget = settings.EGYPTIAN_SEARCH["ORACLE_NODE_BUDGET"]

    started = time.perf_counter()
    search = _SubsetSearch(weights, n, scale, budget)
    found = search.run()
    logger.info(
        "Oracle n=%d q=%d B=%d: %s solutions, %s nodes in %s",
        n,
        q,
        cap,
        humanize_count(len(found)),
        humanize_count(search.nodes),
        humanize_duration(time.perf_counter() - started),
    )
    return [SolutionSet(values=tuple(pool.values[i] for i in indices), prime=q) for indices in found]
