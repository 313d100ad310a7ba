"""Node counts of the two search trees and the depth bounds built on them.

The bounds are reported, never enforced: they are checked against the automaton count and any
failure is marked as a probable erratum.
"""

import logging

from src.apps.automaton.services.counting import count_total
from src.apps.recurrence.schemas.counts import BoundsDiagnostic, DepthBounds, NodeCountState
from src.apps.shared.exceptions import DomainError


logger = logging.getLogger(__name__)

MIN_BOUNDS_N = 9


def node_count_state(tree: int, depth: int) -> NodeCountState:
    """Fan tallies of tree 1 or 2 at ``depth``.

    Raises:
        DomainError: If ``tree`` is not 1 or 2, or ``depth < 1``.
    """
    if tree not in (1, 2):
        raise DomainError(f"tree index must be 1 or 2, got {tree}", code="invalid_tree")
    if depth < 1:
        raise DomainError(f"depth must be at least 1, got {depth}", code="invalid_depth")

    a2, a5, a_heart = (1, 0, 0) if tree == 1 else (0, 1, 0)
    for _ in range(depth - 1):
        a2, a5, a_heart = a2 + 3 * a5 + a_heart, a2 + 2 * a5 + a_heart, a5 + a_heart
    return NodeCountState(tree=tree, depth=depth, a2=a2, a5=a5, a_heart=a_heart)  # type: ignore[arg-type]


def node_count(tree: int, depth: int) -> int:
    """N_i(d), the number of nodes of tree ``tree`` at ``depth``.

    Example:
        >>> node_count(1, 3)
        25
    """
    return node_count_state(tree, depth).nodes


def _min_depths(n: int) -> tuple[int, int]:
    match n % 5:
        case 0:
            return n // 5, n // 5
        case 1:
            return (n + 4) // 5, (n - 1) // 5
        case 2:
            return (n + 3) // 5, (n + 3) // 5
        case 3:
            return (n + 2) // 5, (n - 3) // 5
        case _:
            return (n + 6) // 5, (n + 1) // 5


def depth_bounds(n: int, *, d_max: int | None = None) -> DepthBounds:
    """Minimal depths per residue of n mod 5, the maximal depth, and the node-count bounds.

    Args:
        n: Number of unknowns, at least 9.
        d_max: Override of the maximal depth (default ``n - 3``).

    Raises:
        DomainError: If ``n < 9``.
    """
    if n < MIN_BOUNDS_N:
        raise DomainError(f"depth bounds need n >= {MIN_BOUNDS_N}, got {n}", code="n_out_of_range")

    d1_min, d2_min = _min_depths(n)
    deepest = n - 3 if d_max is None else d_max
    return DepthBounds(
        n=n,
        d1_min=d1_min,
        d2_min=d2_min,
        d_max=deepest,
        lower=node_count(1, d1_min) + node_count(2, d2_min),
        upper=node_count(1, deepest) + node_count(2, deepest),
    )


def bounds_diagnostic(n: int) -> BoundsDiagnostic:
    """Check the depth bounds against the automaton count, under both readings of d_max."""
    count = count_total(n)
    stated = depth_bounds(n)
    alternative = depth_bounds(n, d_max=n - 4)

    problems = []
    if not stated.lower <= count:
        problems.append(f"lower bound {stated.lower} exceeds {count}")
    if not count <= stated.upper:
        problems.append(f"upper bound {stated.upper} (d_max=n-3) below {count}")
    if not count <= alternative.upper:
        problems.append(f"upper bound {alternative.upper} (d_max=n-4) below {count}")

    if problems:
        logger.warning("Depth bounds fail at n=%d: %s", n, "; ".join(problems))
    return BoundsDiagnostic(
        n=n,
        count=count,
        stated=stated,
        alternative=alternative,
        status="erratum" if problems else "holds",
        note="; ".join(problems),
    )


def bounds_report(start: int, stop: int) -> list[BoundsDiagnostic]:
    """Diagnostics for every n in ``start..stop`` inclusive."""
    if start > stop:
        raise DomainError(f"empty range {start}..{stop}", code="empty_range")
    return [bounds_diagnostic(n) for n in range(start, stop + 1)]
