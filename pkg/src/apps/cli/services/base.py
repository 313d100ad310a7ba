"""Base class of the solver management commands."""

import io
import logging

from argparse import ArgumentParser
from pathlib import Path
from typing import Any, TextIO

from django.core.management.base import BaseCommand

from src.apps.shared.exceptions.handler import command_exception_handler


logger = logging.getLogger(__name__)


class SolverCommand(BaseCommand):
    """A command whose output goes to stdout or to ``--out FILE``.

    ``--out`` is written only once the command has succeeded.

    Subclasses implement :meth:`add_solver_arguments` and :meth:`solve`; any exception raised by the
    services is turned into a ``CommandError`` carrying the matching exit code.
    """

    requires_system_checks: list[str] = []  # type: ignore[assignment]

    def add_arguments(self, parser: ArgumentParser) -> None:
        """Add ``--out`` and the command's own arguments."""
        parser.add_argument("--out", type=Path, default=None, help="Write output to FILE instead of stdout")
        self.add_solver_arguments(parser)

    def add_solver_arguments(self, parser: ArgumentParser) -> None:
        """Hook for command-specific arguments."""

    def solve(self, sink: TextIO, **options: Any) -> None:  # noqa: ANN401
        """Run the command, writing to ``sink``."""
        raise NotImplementedError

    def handle(self, *args: Any, **options: Any) -> None:  # noqa: ANN401, ARG002
        """Execute the command."""
        command = type(self).__module__.rsplit(".", 1)[-1]
        try:
            out: Path | None = options["out"]
            if out is None:
                self.solve(self.stdout, **options)  # type: ignore[arg-type]
            else:
                buffer = io.StringIO()
                self.solve(buffer, **options)
                out.write_text(buffer.getvalue(), encoding="utf-8")
                logger.info("Wrote %s output to %s", command, out)
        except Exception as exc:
            context = {"command": command, "options": {k: v for k, v in options.items() if k != "stdout"}}
            raise command_exception_handler(exc, context) from exc
