"""Valuation properties of a solution at a prime.

For a solution and a prime p, let alpha be the highest p-adic valuation among the denominators, s the
number of denominators reaching it and x' the cofactors x / p^alpha at those positions. Every solution
then satisfies:

* s >= 2 whenever p divides some denominator;
* with m the highest valuation outside those positions (0 if there is none), m < alpha and
  p^(alpha - m) divides sigma_(s-1)(x'), exactly so when m > 0 is attained only once;
* sigma_(s-2) of any s-1 of the cofactors is prime to p;
* for p = 2 and nine distinct denominators with at least one even, s is even.
"""

import itertools
import logging

from sympy import isprime, primefactors

from src.apps.analysis.schemas.reports import PadicCheck, PadicProfile, PadicReport
from src.apps.core.schemas.values import SolutionSet
from src.apps.core.services.arithmetic import elementary_symmetric, valuation
from src.apps.shared.exceptions import DomainError


logger = logging.getLogger(__name__)

EVEN_OCCURRENCE_N = 9


def padic_profile(solution: SolutionSet, p: int) -> PadicProfile:
    """Locate the highest power of ``p`` in ``solution``.

    Raises:
        DomainError: If ``p`` is not prime.
    """
    if not isprime(p):
        raise DomainError(f"{p} is not prime", code="not_prime")

    valuations = [int(valuation(x, p)) for x in solution.values]
    alpha = max(valuations)
    occurrences = tuple(i for i, v in enumerate(valuations) if v == alpha)
    others = [v for v in valuations if v != alpha]
    return PadicProfile(
        p=p,
        alpha=alpha,
        s=len(occurrences),
        occurrences=occurrences,
        cofactors=tuple(solution.values[i] // p**alpha for i in occurrences),
        runner_up=max(others, default=0),
    )


def padic_check(solution: SolutionSet, p: int) -> PadicCheck:
    """Profile plus every valuation property at ``p``.

    Example:
        >>> padic_check(SolutionSet(values=(2, 3, 6)), 3).passed
        True
    """
    profile = padic_profile(solution, p)
    values = solution.values
    even_enforced = (
        p == 2  # noqa: PLR2004
        and len(values) == EVEN_OCCURRENCE_N
        and solution.distinct
        and any(x % 2 == 0 for x in values)
    )

    if profile.alpha == 0:
        return PadicCheck(
            profile=profile,
            at_least_twice=True,
            cofactor_divisibility=True,
            subsets_coprime=True,
            even_occurrences=True,
            even_occurrences_enforced=even_enforced,
        )

    s, alpha, runner_up = profile.s, profile.alpha, profile.runner_up
    cofactors = list(profile.cofactors)

    if s < 2:  # noqa: PLR2004
        divisible, exact, coprime = False, None, False
    else:
        gap = alpha - runner_up
        sigma = elementary_symmetric(s - 1, cofactors)
        divisible = runner_up < alpha and sigma % p**gap == 0

        exact = None
        runner_up_count = sum(int(valuation(x, p)) == runner_up for x in values)
        if runner_up > 0 and runner_up_count == 1:
            exact = sigma % p ** (gap + 1) != 0

        coprime = all(
            elementary_symmetric(s - 2, list(subset)) % p != 0 for subset in itertools.combinations(cofactors, s - 1)
        )

    check = PadicCheck(
        profile=profile,
        at_least_twice=s >= 2,  # noqa: PLR2004
        cofactor_divisibility=divisible,
        cofactor_exact=exact,
        subsets_coprime=coprime,
        even_occurrences=s % 2 == 0,
        even_occurrences_enforced=even_enforced,
    )
    if not check.passed:
        logger.warning("p-adic properties fail at p=%d for %s", p, solution.as_braces())
    return check


def padic_report(solution: SolutionSet) -> PadicReport:
    """Run :func:`padic_check` at every prime dividing some denominator, ascending."""
    primes = sorted({p for x in solution.values for p in primefactors(x)})
    return PadicReport(values=list(solution.values), checks=[padic_check(solution, p) for p in primes])
