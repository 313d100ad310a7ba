#!/usr/bin/env python
"""Run a solver command (``count``, ``enumerate``, ...) or any Django management command."""
import os
import sys


def main() -> None:
    """Dispatch ``sys.argv`` to Django's management utility."""
    os.environ.setdefault("DJANGO_SETTINGS_MODULE", "src.settings")
    try:
        from django.core.management import execute_from_command_line  # noqa: PLC0415
    except ImportError as exc:
        raise ImportError("Django is not installed; run `uv sync` first.") from exc
    execute_from_command_line(sys.argv)


if __name__ == "__main__":
    main()
