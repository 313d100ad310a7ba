"""Leaf counting over the automaton."""

import functools
import logging
import time

from concurrent.futures import ThreadPoolExecutor

from django.conf import settings

from src.apps.automaton.models import TOP_LEVEL_ORDERS, AutomatonState, Order
from src.apps.automaton.services.transitions import find_rule
from src.apps.shared.exceptions import DomainError
from src.apps.shared.utils.humanization import humanize_count, humanize_duration, humanize_number


logger = logging.getLogger(__name__)

MIN_TOTAL_N = 9


@functools.cache
def _count_memoized(state: AutomatonState, n: int, order: Order) -> int:
    rule = find_rule(state, n, order)
    if rule.is_leaf:
        return 1
    return sum(_count_memoized(child.state, n - child.step, child.order) for child in rule.children)


def _count_plain(state: AutomatonState, n: int, order: Order) -> int:
    rule = find_rule(state, n, order)
    if rule.is_leaf:
        return 1
    return sum(_count_plain(child.state, n - child.step, child.order) for child in rule.children)


def _ensure_countable(n: int) -> None:
    limit = settings.EGYPTIAN_SEARCH["COUNT_LIMIT"]
    if n > limit:
        raise DomainError(f"n={n} exceeds the counting limit {limit}", code="limit_exceeded")


def count_leaves(state: AutomatonState, n: int, order: Order, *, memoize: bool = True) -> int:
    """Number of leaves below the triple.

    The subtree depends only on the triple, so the memoised and plain recursions agree.

    Args:
        state: Automaton state.
        n: Unknowns left, at least 4.
        order: Order applied at this node.
        memoize: Use the shared memo table.

    Returns:
        int: Leaf count.
    """
    _ensure_countable(n)
    counter = _count_memoized if memoize else _count_plain
    return counter(state, n, order)


def count_by_order(
    n: int, *, memoize: bool = True, threads: int | None = None
) -> dict[tuple[AutomatonState, Order], int]:
    """Leaf counts of the seven top-level invocations, in output order.

    Raises:
        DomainError: If ``n < 9`` or ``n`` exceeds the counting limit.
    """
    if n < MIN_TOTAL_N:
        raise DomainError(f"counting needs n >= {MIN_TOTAL_N}, got {n}", code="n_out_of_range")
    _ensure_countable(n)

    workers = threads or settings.EGYPTIAN_SEARCH["THREADS"]

    def _count(pair: tuple[AutomatonState, Order]) -> int:
        return count_leaves(pair[0], n, pair[1], memoize=memoize)

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            counts = list(pool.map(_count, TOP_LEVEL_ORDERS))
    else:
        counts = [_count(pair) for pair in TOP_LEVEL_ORDERS]

    return dict(zip(TOP_LEVEL_ORDERS, counts, strict=True))


def count_total(n: int, *, memoize: bool = True, threads: int | None = None) -> int:
    """Number of q=3 solutions with n distinct denominators 2^a*3^b, a <= 2.

    Example:
        >>> count_total(22)
        228102
    """
    started = time.perf_counter()
    total = sum(count_by_order(n, memoize=memoize, threads=threads).values())
    logger.info(
        "Counted %s solutions for n=%d in %s",
        humanize_count(total),
        n,
        humanize_duration(time.perf_counter() - started),
    )
    return total


def count_range(start: int, stop: int, *, memoize: bool = True, threads: int | None = None) -> list[tuple[int, int]]:
    """``(n, count_total(n))`` for every n in ``start..stop`` inclusive."""
    if start > stop:
        raise DomainError(f"empty range {start}..{stop}", code="empty_range")
    counts = [(n, count_total(n, memoize=memoize, threads=threads)) for n in range(start, stop + 1)]
    logger.info("Counted n=%d..%d, up to %s solutions", start, stop, humanize_number(counts[-1][1]))
    return counts


def clear_memo() -> None:
    """Drop the memo table."""
    _count_memoized.cache_clear()
