"""Enumerate the q=3 solutions."""

from argparse import ArgumentParser
from typing import Any, TextIO

from src.apps.cli.services.arguments import positive_int
from src.apps.cli.services.base import SolverCommand
from src.apps.enumerator.models import OutputFormat
from src.apps.enumerator.services.emitters import emit
from src.apps.enumerator.services.enumeration import enumerate_solutions


class Command(SolverCommand):
    """Write every solution for one n as brace lines, JSON or CSV."""

    help = "Enumerate solutions with n distinct denominators 2^a*3^b, a <= 2"

    def add_solver_arguments(self, parser: ArgumentParser) -> None:
        """Add enumeration arguments."""
        parser.add_argument("--n", type=positive_int, required=True, help="Number of unit fractions")
        parser.add_argument(
            "--format",
            dest="output_format",
            choices=OutputFormat.values,
            default=OutputFormat.TEXT,
            help="Output format",
        )
        parser.add_argument("--threads", type=positive_int, default=None, help="Build subtrees in parallel")

    def solve(self, sink: TextIO, **options: Any) -> None:  # noqa: ANN401
        """Stream sequentially, or collect the parallel run first."""
        n, threads = options["n"], options["threads"]
        solutions = enumerate_solutions(n, threads=threads) if threads and threads > 1 else None
        emit(n, options["output_format"], sink, solutions=solutions)
