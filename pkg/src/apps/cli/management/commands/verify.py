"""Validate candidate solutions read from a JSON file."""

import json

from argparse import ArgumentParser
from pathlib import Path
from typing import Any, TextIO

from django.core.management import CommandError
from pydantic import BaseModel, Field, ValidationError

from src.apps.analysis.services.validation import DEFAULT_MAX_A, verify_candidates
from src.apps.cli.services.arguments import positive_int
from src.apps.cli.services.base import SolverCommand
from src.apps.core.schemas.values import SolutionSet
from src.apps.shared.exceptions import DomainError


class CandidateFile(BaseModel):
    """Accepted input: the enumeration JSON schema, or a bare list of integer lists."""

    prime: int | None = Field(None, description="Odd prime declared by the producer")
    solutions: list[list[int]] = Field(default_factory=list, description="Candidates")


def load_candidates(path: Path) -> CandidateFile:
    """Read and validate a candidate file.

    Raises:
        DomainError: If the file is missing or not in an accepted shape.
    """
    if not path.exists():
        raise DomainError(f"File not found: {path}", code="file_missing")
    try:
        with path.open("r", encoding="utf-8") as f:
            raw = json.load(f)
        if isinstance(raw, list):
            raw = {"solutions": raw}
        return CandidateFile(**raw)
    except (json.JSONDecodeError, ValidationError, TypeError) as e:
        raise DomainError(f"{path.name} is not a list of integer lists: {e}", code="invalid_input") from e


class Command(SolverCommand):
    """Print a verification summary; exit 1 when any candidate fails."""

    help = "Validate candidate solutions: exact sum, distinctness and 2^a*q^b form"

    def add_solver_arguments(self, parser: ArgumentParser) -> None:
        """Add verification arguments."""
        parser.add_argument("--file", type=Path, required=True, help="JSON candidates")
        parser.add_argument("--prime", type=int, default=None, help="Require the form 2^a*q^b for this q")
        parser.add_argument("--max-a", type=int, default=DEFAULT_MAX_A, help="Largest exponent of 2 in the form")
        parser.add_argument("--allow-repeats", action="store_true", help="Do not require distinct denominators")
        parser.add_argument("--padic", action="store_true", help="Also run the p-adic checks")

    def solve(self, sink: TextIO, **options: Any) -> None:  # noqa: ANN401
        """Write the summary as JSON."""
        candidates = load_candidates(options["file"])
        prime = options["prime"] if options["prime"] is not None else candidates.prime
        distinct = not options["allow_repeats"]

        try:
            solutions = [
                SolutionSet(values=tuple(values), prime=prime, distinct=distinct) for values in candidates.solutions
            ]
        except ValidationError as e:
            raise DomainError(f"invalid candidate: {e}", code="invalid_input") from e

        summary = verify_candidates(
            solutions, prime=prime, max_a=options["max_a"], distinct=distinct, padic=options["padic"]
        )
        sink.write(summary.model_dump_json(indent=2) + "\n")

        padic_failures = sum(not report.passed for report in summary.padic)
        if summary.failed or padic_failures:
            raise CommandError(
                f"{summary.failed} of {summary.total} candidates failed validation, "
                f"{padic_failures} failed the p-adic checks",
                returncode=1,
            )
