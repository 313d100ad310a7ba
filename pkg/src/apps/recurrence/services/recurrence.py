"""Closed recurrence for the per-order solution counts.

Each component at n is a sum of components at n-1, n-2, n-3 or n-5, plus a one-off correction at
the smallest n where the order can first reach a leaf. Everything below n=3 is zero and the only
non-zero value at n=3 is tri(3)=1.
"""

import functools

from src.apps.recurrence.schemas.counts import CountVector
from src.apps.shared.exceptions import DomainError


MIN_VECTOR_N = 3
MIN_TOTAL_N = 9

_COMPONENTS = ("tri", "sq", "ast", "dia", "st1", "st2", "st", "t", "p")


def _state_one_sum(row: dict[str, int]) -> int:
    return row["tri"] + row["sq"] + row["st1"] + row["st2"] + row["st"]


def _state_two_sum(row: dict[str, int]) -> int:
    return row["ast"] + row["dia"]


def _red_sum(row: dict[str, int]) -> int:
    return row["ast"] + row["dia"] + row["t"] + row["p"]


@functools.cache
def _table(n: int) -> tuple[dict[str, int], ...]:
    zero = dict.fromkeys(_COMPONENTS, 0)
    rows: list[dict[str, int]] = [zero, zero, zero, {**zero, "tri": 1}]

    def at(m: int) -> dict[str, int]:
        return rows[m] if m >= 0 else zero

    for m in range(4, n + 1):
        rows.append(
            {
                "tri": _state_one_sum(at(m - 1)),
                "sq": _state_two_sum(at(m - 1)),
                "ast": _state_two_sum(at(m - 1)) + (m == 4),
                "dia": _state_one_sum(at(m - 2)),
                "st1": _state_two_sum(at(m - 3)) + (m == 6),
                "st2": _red_sum(at(m - 5)) + (m == 8),
                "st": _state_one_sum(at(m - 5)),
                "t": _red_sum(at(m - 2)) + (m == 5),
                "p": _state_one_sum(at(m - 2)),
            }
        )
    return tuple(rows)


def count_vector(n: int) -> CountVector:
    """Solve the recurrence system forward up to ``n``.

    Raises:
        DomainError: If ``n < 3``.

    Example:
        >>> count_vector(9).as_tuple()
        (18, 10, 10, 9, 3, 1, 1, 11, 9)
    """
    if n < MIN_VECTOR_N:
        raise DomainError(f"the recurrence starts at n={MIN_VECTOR_N}, got {n}", code="n_out_of_range")
    return CountVector(n=n, **_table(n)[n])


def recurrence_total(n: int) -> int:
    """Number of q=3 solutions: the sum of the first seven components.

    Raises:
        DomainError: If ``n < 9``.
    """
    if n < MIN_TOTAL_N:
        raise DomainError(f"solution totals need n >= {MIN_TOTAL_N}, got {n}", code="n_out_of_range")
    return count_vector(n).total


def theorem2_total(n: int) -> int:
    """All solutions with denominators 2^a*q^b, a <= 2, q any odd prime.

    Adds the q=5 family (every n) and the q=7 family (odd n only) to the q=3 count.

    Example:
        >>> theorem2_total(9)
        54
    """
    return recurrence_total(n) + (2 if n % 2 else 1)
