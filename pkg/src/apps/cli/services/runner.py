"""Console entry point: ``egyptian-kn <command> [flags]``."""

import os
import sys

from collections.abc import Sequence


SUBCOMMANDS = ("count", "enumerate", "verify", "oracle", "families", "bounds", "expand", "structure")

USAGE = f"usage: egyptian-kn {{{','.join(SUBCOMMANDS)}}} [flags]\n"

USAGE_ERROR = 2


def run(argv: Sequence[str] | None = None) -> int:
    """Dispatch one subcommand and return its exit status.

    Unknown subcommands and bad flags give 2, resource limits 3, failed validations and domain errors 1.

    Example:
        >>> run(["count", "--range", "9..13"])
        (9,52)
        (10,100)
        (11,190)
        (12,362)
        (13,690)
        0
    """
    args = list(sys.argv[1:] if argv is None else argv)
    if not args or args[0] not in SUBCOMMANDS:
        sys.stderr.write(USAGE)
        return USAGE_ERROR

    os.environ.setdefault("DJANGO_SETTINGS_MODULE", "src.settings")
    from django.core.management import execute_from_command_line  # noqa: PLC0415

    try:
        execute_from_command_line(["egyptian-kn", *args])
    except SystemExit as exc:
        if exc.code is None:
            return 0
        return exc.code if isinstance(exc.code, int) else 1
    return 0


def main() -> None:
    """Run with ``sys.argv`` and exit with the command's status."""
    sys.exit(run())
