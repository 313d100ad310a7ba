"""argparse ``type=`` converters shared by the commands."""

import argparse

from fractions import Fraction


def parse_range(raw: str) -> tuple[int, int]:
    """Parse ``A..B`` into an inclusive (start, stop) pair.

    Example:
        >>> parse_range("9..30")
        (9, 30)
    """
    start, sep, stop = raw.partition("..")
    try:
        if not sep:
            raise ValueError(raw)
        bounds = int(start), int(stop)
    except ValueError as e:
        raise argparse.ArgumentTypeError(f"expected A..B, got {raw!r}") from e
    if bounds[0] > bounds[1]:
        raise argparse.ArgumentTypeError(f"empty range {raw!r}")
    return bounds


def parse_int_list(raw: str) -> tuple[int, ...]:
    """Parse ``2,3,6`` (braces allowed) into positive integers."""
    try:
        values = tuple(int(part) for part in raw.strip("{}[] ").split(","))
    except ValueError as e:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {raw!r}") from e
    if any(v < 1 for v in values):
        raise argparse.ArgumentTypeError("denominators must be positive")
    return values


def parse_fraction(raw: str) -> Fraction:
    """Parse ``x/y`` into an exact fraction."""
    try:
        return Fraction(raw)
    except (ValueError, ZeroDivisionError) as e:
        raise argparse.ArgumentTypeError(f"expected a fraction x/y, got {raw!r}") from e


def positive_int(raw: str) -> int:
    """Integer of at least 1."""
    try:
        value = int(raw)
    except ValueError as e:
        raise argparse.ArgumentTypeError(f"expected an integer, got {raw!r}") from e
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value
