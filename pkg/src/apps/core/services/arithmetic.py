"""Exact arithmetic on denominators: reciprocal sums, valuations, elementary symmetric functions.

Nothing here touches floating point. Integers are Python ints throughout, so the 2*3^33 denominators
met at n = 35 need no special handling.
"""

import enum
import math

from collections.abc import Sequence
from fractions import Fraction
from typing import Literal

from sympy import isprime, multiplicity

from src.apps.core.schemas.values import FactoredValue
from src.apps.shared.exceptions import DomainError


Rational = Fraction


class Infinite(enum.Enum):
    """The valuation of 0."""

    INFINITE = "inf"

    def __repr__(self) -> str:
        return "INFINITE"


INFINITE = Infinite.INFINITE

Valuation = int | Literal[Infinite.INFINITE]


def reciprocal_sum(values: Sequence[int | FactoredValue]) -> Rational:
    """Exact, reduced sum of 1/x over ``values``.

    Factored inputs sharing one prime go through :func:`reciprocal_sum_factored`; anything else is
    summed over the lcm of the integers. The empty sum is 0.

    Args:
        values: Positive integers or factored values.

    Returns:
        Fraction: The reduced sum.

    Raises:
        DomainError: If an integer is smaller than 1.

    Example:
        >>> reciprocal_sum([2, 3, 7])
        Fraction(41, 42)
    """
    if not values:
        return Fraction(0)

    if all(isinstance(v, FactoredValue) for v in values):
        factored = [v for v in values if isinstance(v, FactoredValue)]
        if len({f.q for f in factored}) == 1:
            return reciprocal_sum_factored(factored)

    integers = [v.value if isinstance(v, FactoredValue) else v for v in values]
    if any(x < 1 for x in integers):
        raise DomainError("reciprocal sums need positive integers")

    common = math.lcm(*integers)
    return Fraction(sum(common // x for x in integers), common)


def reciprocal_sum_factored(values: Sequence[FactoredValue]) -> Rational:
    """Reciprocal sum over the factored common denominator 2^max(2, a) * q^max(b).

    Raises:
        DomainError: If the values do not share a single prime.
    """
    primes = {v.q for v in values}
    if len(primes) != 1:
        raise DomainError(f"factored sum needs one shared prime, got {sorted(primes)}")
    q = primes.pop()

    top_a = max(2, *(v.a for v in values))
    top_b = max(v.b for v in values)
    total = sum(2 ** (top_a - v.a) * q ** (top_b - v.b) for v in values)
    return Fraction(total, 2**top_a * q**top_b)


def valuation(x: int, p: int) -> Valuation:
    """Exponent of the prime ``p`` in ``x``; :data:`INFINITE` for ``x == 0``.

    Raises:
        DomainError: If ``p`` is not prime or ``x`` is negative.

    Example:
        >>> valuation(4374, 3)
        7
    """
    if not isprime(p):
        raise DomainError(f"{p} is not prime", code="not_prime")
    if x < 0:
        raise DomainError(f"valuation of negative integer {x}")
    if x == 0:
        return INFINITE
    return int(multiplicity(p, x))


def elementary_symmetric(k: int, values: Sequence[int]) -> int:
    """The k-th elementary symmetric function of ``values``.

    Read off as the coefficient of t^k in prod(1 + v*t).

    Raises:
        DomainError: If ``k`` is outside ``0..len(values)``.

    Example:
        >>> elementary_symmetric(2, [49, 175, 1])
        8799
    """
    if not 0 <= k <= len(values):
        raise DomainError(f"degree {k} outside 0..{len(values)}", code="invalid_degree")

    coefficients = [1] + [0] * k
    for index, value in enumerate(values, start=1):
        for degree in range(min(index, k), 0, -1):
            coefficients[degree] += coefficients[degree - 1] * value
    return coefficients[k]


def is_odd_prime(q: int) -> bool:
    """Whether ``q`` is an odd prime."""
    return q != 2 and bool(isprime(q))  # noqa: PLR2004
