"""Candidate validation: exact sum, distinctness and the 2^a*q^b form."""

from collections.abc import Iterable

from src.apps.analysis.schemas.reports import ValidationReport, VerificationSummary
from src.apps.analysis.services.padic import padic_report
from src.apps.core.schemas.values import FactoredValue, SolutionSet
from src.apps.core.services.arithmetic import is_odd_prime
from src.apps.shared.exceptions import DomainError


DEFAULT_MAX_A = 2


def _form_failures(values: tuple[int, ...], prime: int, max_a: int) -> list[str]:
    failures = []
    for x in values:
        try:
            factored = FactoredValue.from_int(x, prime)
        except DomainError:
            failures.append(f"{x} is not of the form 2^a*{prime}^b")
            continue
        if factored.a > max_a:
            failures.append(f"{x} has 2-exponent {factored.a} > {max_a}")
    return failures


def validate_solution(
    solution: SolutionSet,
    *,
    distinct: bool | None = None,
    prime: int | None = None,
    max_a: int | None = None,
) -> ValidationReport:
    """Check a candidate criterion by criterion; failures are report entries, never exceptions.

    Args:
        solution: The candidate.
        distinct: Require pairwise distinct values (defaults to ``solution.distinct``).
        prime: Require the form 2^a*prime^b (defaults to ``solution.prime``; None skips the check).
        max_a: Largest exponent of 2 for the form check, 2 by default.

    Returns:
        ValidationReport: One entry per failed criterion.

    Raises:
        DomainError: If ``prime`` is given and is not an odd prime.

    Example:
        >>> validate_solution(SolutionSet(values=(2, 3, 7), prime=None)).passed
        False
    """
    values = solution.values
    distinct = solution.distinct if distinct is None else distinct
    prime = solution.prime if prime is None else prime
    if prime is not None and not is_odd_prime(prime):
        raise DomainError(f"{prime} is not an odd prime", code="not_odd_prime")

    failures: list[str] = []
    total = solution.reciprocal_sum()
    if total != 1:
        failures.append(f"reciprocal sum is {total}, not 1")

    distinct_ok = None
    if distinct:
        distinct_ok = len(set(values)) == len(values)
        if not distinct_ok:
            failures.append("denominators are not pairwise distinct")

    form_ok = None
    if prime is not None:
        max_a = DEFAULT_MAX_A if max_a is None else max_a
        form_failures = _form_failures(values, prime, max_a)
        form_ok = not form_failures
        failures.extend(form_failures)

    return ValidationReport(
        values=list(values),
        reciprocal_sum=str(total),
        sum_is_one=total == 1,
        distinct_ok=distinct_ok,
        form_ok=form_ok,
        prime=prime,
        max_a=max_a if prime is not None else None,
        failures=failures,
    )


def verify_candidates(
    candidates: Iterable[SolutionSet],
    *,
    prime: int | None = None,
    max_a: int | None = None,
    distinct: bool | None = None,
    padic: bool = False,
) -> VerificationSummary:
    """Validate a batch; with ``padic`` also run the p-adic checks on candidates that pass."""
    reports: list[ValidationReport] = []
    padic_reports = []
    for candidate in candidates:
        report = validate_solution(candidate, distinct=distinct, prime=prime, max_a=max_a)
        reports.append(report)
        if padic and report.sum_is_one:
            padic_reports.append(padic_report(candidate))

    passed = sum(report.passed for report in reports)
    return VerificationSummary(
        total=len(reports),
        passed=passed,
        failed=len(reports) - passed,
        reports=reports,
        padic=padic_reports,
    )
