"""Closed-form families and the labelled nine-term catalog."""

from argparse import ArgumentParser
from typing import Any, TextIO

from src.apps.cli.services.arguments import positive_int
from src.apps.cli.services.base import SolverCommand
from src.apps.core.schemas.values import FactoredValue
from src.apps.families.services.catalog import catalog_theorem1
from src.apps.families.services.families import family_U, family_V, family_Z1
from src.apps.recurrence.services.recurrence import theorem2_total


class Command(SolverCommand):
    """Print U_n, V_n and Z_1 for one n with the overall total, or the catalog in fixture format."""

    help = "Print the q=5, q=7 and all-Triangle families, or the labelled catalog"

    def add_solver_arguments(self, parser: ArgumentParser) -> None:
        """Add family arguments."""
        target = parser.add_mutually_exclusive_group(required=True)
        target.add_argument("--n", type=positive_int, help="Number of unit fractions")
        target.add_argument("--catalog", action="store_true", help="Print the 54 labelled solutions for n=9")

    def solve(self, sink: TextIO, **options: Any) -> None:  # noqa: ANN401
        """Write families or catalog lines."""
        if options["catalog"]:
            for entry in catalog_theorem1().entries:
                q = entry.prime or 0
                factored = [FactoredValue.from_int(x, q) for x in entry.solution.values]
                pairs = ",".join(f"({f.a},{f.b})" for f in factored)
                sink.write(f"{entry.label} {q} {pairs}\n")
            return

        n = options["n"]
        sink.write(f"U_{n} {family_U(n).as_braces()}\n")
        if n % 2:
            sink.write(f"V_{n} {family_V(n).as_braces()}\n")
        else:
            sink.write(f"V_{n} none\n")
        sink.write(f"Z_1 {family_Z1(n).as_braces()}\n")
        sink.write(f"total {theorem2_total(n)}\n")
