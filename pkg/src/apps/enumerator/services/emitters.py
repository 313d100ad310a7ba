"""Writers for enumeration output: brace lines, JSON and CSV."""

import csv
import logging

from collections.abc import Iterable
from typing import TextIO

from src.apps.core.schemas.values import SolutionSet
from src.apps.enumerator.models import OutputFormat
from src.apps.enumerator.schemas.report import EmissionSummary, EnumerationReport
from src.apps.enumerator.services.enumeration import PRIME, iter_solutions


logger = logging.getLogger(__name__)


def _emit_text(solutions: Iterable[SolutionSet], sink: TextIO) -> int:
    count = 0
    for solution in solutions:
        sink.write(solution.as_braces() + "\n")
        count += 1
    sink.write(f"There are {count} solutions\n")
    return count


def _emit_json(n: int, solutions: Iterable[SolutionSet], sink: TextIO) -> int:
    rows = [list(solution.values) for solution in solutions]
    report = EnumerationReport(n=n, prime=PRIME, count=len(rows), solutions=rows)
    sink.write(report.model_dump_json() + "\n")
    return report.count


def _emit_csv(n: int, solutions: Iterable[SolutionSet], sink: TextIO) -> int:
    writer = csv.writer(sink, lineterminator="\n")
    writer.writerow([f"x{i}" for i in range(1, n + 1)])
    count = 0
    for solution in solutions:
        writer.writerow(solution.values)
        count += 1
    return count


def emit(
    n: int,
    output_format: OutputFormat | str,
    sink: TextIO,
    solutions: Iterable[SolutionSet] | None = None,
) -> EmissionSummary:
    """Write the solutions for ``n`` to ``sink``.

    Text and CSV stream straight from :func:`iter_solutions`; JSON needs the full list for its count
    field. Pass ``solutions`` to write an already computed (e.g. parallel) run instead.

    Args:
        n: Number of unit fractions.
        output_format: One of :class:`OutputFormat`.
        sink: Any text stream.
        solutions: Precomputed solutions, in output order.

    Returns:
        EmissionSummary: The number of solutions written.

    Raises:
        DomainError: If ``n`` cannot be enumerated.
        OSError: If the sink refuses a write.
    """
    output_format = OutputFormat(output_format)
    source = solutions if solutions is not None else iter_solutions(n)

    match output_format:
        case OutputFormat.TEXT:
            count = _emit_text(source, sink)
        case OutputFormat.JSON:
            count = _emit_json(n, source, sink)
        case OutputFormat.CSV:
            count = _emit_csv(n, source, sink)

    logger.debug("Wrote %d solutions for n=%d as %s", count, n, output_format.value)
    return EmissionSummary(n=n, format=output_format.value, count=count)
