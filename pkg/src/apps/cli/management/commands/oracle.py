"""Brute-force solution search, independent of the automaton."""

from argparse import ArgumentParser
from typing import Any, TextIO

from django.conf import settings

from src.apps.cli.services.arguments import positive_int
from src.apps.cli.services.base import SolverCommand
from src.apps.oracle.services.general import general_enumerate
from src.apps.oracle.services.restricted import default_exponent_cap, restricted_brute_force
from src.apps.oracle.services.verdict import compare_with_reference


MIN_REFERENCE_N = 9


class Command(SolverCommand):
    """Print the brute-force solutions and compare them with the constructive producers."""

    help = "Brute-force the 2^a*q^b solutions (or, with --general, all solutions for small n)"

    def add_solver_arguments(self, parser: ArgumentParser) -> None:
        """Add oracle arguments."""
        parser.add_argument("--n", type=positive_int, required=True, help="Number of unit fractions")
        parser.add_argument("--prime", type=int, default=3, help="Odd prime q")
        parser.add_argument("--cap", type=positive_int, default=None, help="Exponent cap B on q")
        parser.add_argument("--general", action="store_true", help="Unrestricted denominators, n <= 7")
        parser.add_argument("--distinct", action="store_true", help="With --general: distinct denominators only")
        parser.add_argument("--format", dest="output_format", choices=["text", "json"], default="text")

    def solve(self, sink: TextIO, **options: Any) -> None:  # noqa: ANN401
        """Write the solutions, then the verdict."""
        n, q = options["n"], options["prime"]

        if options["general"]:
            solutions = general_enumerate(n, distinct=options["distinct"])
            for solution in solutions:
                sink.write(solution.as_braces() + "\n")
            sink.write(f"There are {len(solutions)} solutions\n")
            return

        cap = options["cap"] if options["cap"] is not None else default_exponent_cap(n, q)
        found = restricted_brute_force(n, q, cap)

        if not self._has_reference(n, q):
            for solution in found:
                sink.write(solution.as_braces() + "\n")
            sink.write(f"There are {len(found)} solutions\n")
            sink.write("reference: unavailable\n")
            return

        verdict = compare_with_reference(n, q, found, cap=cap)
        if options["output_format"] == "json":
            sink.write(verdict.model_dump_json(indent=2) + "\n")
            return
        for solution in found:
            sink.write(solution.as_braces() + "\n")
        sink.write(f"There are {len(found)} solutions\n")
        sink.write(f"reference: {len(verdict.reference)} solutions, {'match' if verdict.matches else 'MISMATCH'}\n")
        for values in verdict.missing:
            sink.write(f"missing {{{','.join(map(str, values))}}}\n")
        for values in verdict.extra:
            sink.write(f"extra {{{','.join(map(str, values))}}}\n")

    @staticmethod
    def _has_reference(n: int, q: int) -> bool:
        if n < MIN_REFERENCE_N:
            return False
        return q != 3 or n <= settings.EGYPTIAN_SEARCH["ENUMERATION_LIMIT"]  # noqa: PLR2004
