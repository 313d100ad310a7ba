"""Arithmetical structure of a solution."""

from argparse import ArgumentParser
from typing import Any, TextIO

from src.apps.analysis.services.structures import to_structure
from src.apps.cli.services.arguments import parse_int_list
from src.apps.cli.services.base import SolverCommand
from src.apps.core.schemas.values import SolutionSet


class Command(SolverCommand):
    """Print (d, r) for a solution as text or JSON."""

    help = "Convert a solution into an arithmetical structure on the complete graph"

    def add_solver_arguments(self, parser: ArgumentParser) -> None:
        """Add structure arguments."""
        parser.add_argument("--values", type=parse_int_list, required=True, help="Solution, e.g. 2,3,6")
        parser.add_argument("--format", dest="output_format", choices=["text", "json"], default="text")

    def solve(self, sink: TextIO, **options: Any) -> None:  # noqa: ANN401
        """Write d and r."""
        structure = to_structure(SolutionSet(values=options["values"], prime=None, distinct=False))
        if options["output_format"] == "json":
            sink.write(structure.model_dump_json() + "\n")
            return
        sink.write(f"d=({','.join(map(str, structure.d))})\n")
        sink.write(f"r=({','.join(map(str, structure.r))})\n")
