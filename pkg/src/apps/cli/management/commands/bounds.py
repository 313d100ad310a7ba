"""Depth-bound diagnostics."""

from argparse import ArgumentParser
from typing import Any, TextIO

from src.apps.cli.services.arguments import parse_range, positive_int
from src.apps.cli.services.base import SolverCommand
from src.apps.recurrence.services.bounds import bounds_diagnostic, bounds_report


class Command(SolverCommand):
    """One diagnostic line per n: minimal depths, bounds, actual count and status."""

    help = "Check the node-count bounds on the number of q=3 solutions"

    def add_solver_arguments(self, parser: ArgumentParser) -> None:
        """Add bounds arguments."""
        target = parser.add_mutually_exclusive_group(required=True)
        target.add_argument("--n", type=positive_int, help="Number of unit fractions")
        target.add_argument("--range", type=parse_range, dest="span", metavar="A..B", help="Inclusive range of n")

    def solve(self, sink: TextIO, **options: Any) -> None:  # noqa: ANN401
        """Write the diagnostics."""
        if options["span"] is not None:
            diagnostics = bounds_report(*options["span"])
        else:
            diagnostics = [bounds_diagnostic(options["n"])]
        for diagnostic in diagnostics:
            sink.write(diagnostic.as_line() + "\n")
