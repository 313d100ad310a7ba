"""Count the q=3 solutions with the automaton."""

from argparse import ArgumentParser
from typing import Any, TextIO

from src.apps.automaton.services.counting import count_by_order, count_range, count_total
from src.apps.cli.services.arguments import parse_range, positive_int
from src.apps.cli.services.base import SolverCommand


class Command(SolverCommand):
    """Print solution counts for one n or a range of n."""

    help = "Count solutions with n distinct denominators 2^a*3^b, a <= 2"

    def add_solver_arguments(self, parser: ArgumentParser) -> None:
        """Add counting arguments."""
        target = parser.add_mutually_exclusive_group(required=True)
        target.add_argument("--n", type=positive_int, help="Number of unit fractions")
        target.add_argument("--range", type=parse_range, dest="span", metavar="A..B", help="Inclusive range of n")
        parser.add_argument("--by-order", action="store_true", help="Also print the seven top-level counts")
        parser.add_argument("--no-memo", action="store_true", help="Use the plain recursion")
        parser.add_argument("--threads", type=positive_int, default=None, help="Worker threads")

    def solve(self, sink: TextIO, **options: Any) -> None:  # noqa: ANN401
        """Write "(n,count)" lines for a range, or the total for one n."""
        memoize = not options["no_memo"]
        threads = options["threads"]

        if options["span"] is not None:
            start, stop = options["span"]
            for n, count in count_range(start, stop, memoize=memoize, threads=threads):
                sink.write(f"({n},{count})\n")
            return

        n = options["n"]
        if options["by_order"]:
            for (_, order), count in count_by_order(n, memoize=memoize, threads=threads).items():
                sink.write(f"{order.label} {count}\n")
        sink.write(f"There are {count_total(n, memoize=memoize, threads=threads)} solutions\n")
