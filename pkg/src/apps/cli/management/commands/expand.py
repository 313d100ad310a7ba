"""Greedy and identity expansions."""

from argparse import ArgumentParser
from typing import Any, TextIO

from src.apps.analysis.models import IdentityKind
from src.apps.analysis.services.expansions import expand_solution, greedy_expand, identity_expand, iter_expansions
from src.apps.cli.services.arguments import parse_fraction, parse_int_list, positive_int
from src.apps.cli.services.base import SolverCommand
from src.apps.core.schemas.values import SolutionSet
from src.apps.shared.exceptions import DomainError


def _braces(values: list[int] | tuple[int, ...]) -> str:
    return "{" + ",".join(map(str, values)) + "}"


class Command(SolverCommand):
    """Expand a fraction greedily, a unit fraction by an identity, or one term of a solution."""

    help = "Egyptian-fraction expansions"

    def add_solver_arguments(self, parser: ArgumentParser) -> None:
        """Add expansion arguments."""
        source = parser.add_mutually_exclusive_group(required=True)
        source.add_argument("--fraction", type=parse_fraction, help="Greedy expansion of x/y in (0, 1]")
        source.add_argument("--value", type=positive_int, help="Split 1/x with --identity")
        source.add_argument("--solution", type=parse_int_list, help="Split a term of this solution")
        parser.add_argument("--identity", choices=IdentityKind.values, default=None, help="Splitting identity")
        parser.add_argument("--index", type=int, default=None, help="Zero-based term of --solution (all if omitted)")

    def solve(self, sink: TextIO, **options: Any) -> None:  # noqa: ANN401
        """Write the expansion(s)."""
        if options["fraction"] is not None:
            sink.write(_braces(greedy_expand(options["fraction"])) + "\n")
            return

        which = options["identity"]
        if which is None:
            raise DomainError("--identity is required with --value and --solution", code="missing_identity")

        if options["value"] is not None:
            sink.write(_braces(identity_expand(options["value"], which)) + "\n")
            return

        values = options["solution"]
        solution = SolutionSet(values=values, prime=None, distinct=len(set(values)) == len(values))
        if options["index"] is not None:
            sink.write(expand_solution(solution, options["index"], which).as_braces() + "\n")
            return
        for expanded in iter_expansions(solution, which):
            sink.write(expanded.as_braces() + "\n")
