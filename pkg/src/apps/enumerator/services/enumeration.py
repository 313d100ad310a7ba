"""Depth-first construction of the q=3 solutions.

The tree is walked exactly like the counting recursion, but every path carries its own
:class:`PartialSolution`, so nothing is memoised here.
"""

import logging
import time

from collections.abc import Iterator
from concurrent.futures import ThreadPoolExecutor

from django.conf import settings

from src.apps.automaton.models import TOP_LEVEL_ORDERS, AutomatonState, Order
from src.apps.automaton.schemas.rules import EmissionRule
from src.apps.automaton.services.table import ROOT_SEEDS
from src.apps.automaton.services.transitions import find_rule
from src.apps.core.schemas.values import SolutionSet
from src.apps.enumerator.schemas.partial import PartialSolution
from src.apps.shared.exceptions import DomainError, InvariantViolation
from src.apps.shared.utils.humanization import humanize_count, humanize_duration


logger = logging.getLogger(__name__)

MIN_ENUMERATION_N = 9
PRIME = 3


def resolve_leaf(partial: PartialSolution, leaf_rule: EmissionRule) -> SolutionSet:
    """Finish a path: add the leaf's emissions and fix the highest 3-exponent.

    The exponent is ``partial.counter + leaf_rule.resolution_offset``; every deferred entry becomes
    coef*3^(A - tag).

    Raises:
        InvariantViolation: If ``leaf_rule`` is not a leaf rule or an exponent comes out negative.
    """
    if leaf_rule.resolution_offset is None:
        raise InvariantViolation("resolve_leaf needs a leaf rule", code="not_a_leaf")
    finished = partial.extend(leaf_rule.emissions)
    resolution = partial.counter + leaf_rule.resolution_offset
    return SolutionSet(values=finished.materialize(resolution), prime=PRIME, distinct=True)


def _walk(state: AutomatonState, n: int, order: Order, partial: PartialSolution) -> Iterator[SolutionSet]:
    rule = find_rule(state, n, order)
    if rule.is_leaf:
        yield resolve_leaf(partial, rule.emission)
        return

    extended = partial.extend(rule.emission.emissions)
    for child in rule.children:
        yield from _walk(child.state, n - child.step, child.order, extended.advance(child.counter_increment))


def iter_subtree(state: AutomatonState, n: int, order: Order) -> Iterator[SolutionSet]:
    """Solutions of one top-level invocation, depth first."""
    root = PartialSolution().extend(ROOT_SEEDS[state])
    yield from _walk(state, n, order, root.advance(1))


def _ensure_enumerable(n: int) -> None:
    limit = settings.EGYPTIAN_SEARCH["ENUMERATION_LIMIT"]
    if not MIN_ENUMERATION_N <= n <= limit:
        raise DomainError(f"enumeration needs {MIN_ENUMERATION_N} <= n <= {limit}, got {n}", code="n_out_of_range")


def iter_solutions(n: int) -> Iterator[SolutionSet]:
    """Lazily yield every solution in output order.

    Raises:
        DomainError: If ``n`` is outside ``9..ENUMERATION_LIMIT``.
    """
    _ensure_enumerable(n)
    for state, order in TOP_LEVEL_ORDERS:
        yield from iter_subtree(state, n, order)


def enumerate_solutions(n: int, *, threads: int | None = None) -> list[SolutionSet]:
    """All q=3 solutions with n distinct denominators, in output order.

    With ``threads > 1`` the seven top-level subtrees are built concurrently and concatenated in the
    fixed order, so the result is identical to the sequential run.

    Example:
        >>> enumerate_solutions(9)[0].as_braces()
        '{2,3,9,27,81,243,729,2187,4374}'
    """
    _ensure_enumerable(n)
    started = time.perf_counter()
    workers = threads or settings.EGYPTIAN_SEARCH["THREADS"]

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            chunks = pool.map(lambda pair: list(iter_subtree(pair[0], n, pair[1])), TOP_LEVEL_ORDERS)
            solutions = [solution for chunk in chunks for solution in chunk]
    else:
        solutions = list(iter_solutions(n))

    logger.info(
        "Enumerated %s solutions for n=%d in %s",
        humanize_count(len(solutions)),
        n,
        humanize_duration(time.perf_counter() - started),
    )
    return solutions
