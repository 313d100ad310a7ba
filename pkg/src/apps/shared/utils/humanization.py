"""Utility functions for humanizing figures in log lines.

Only log messages go through these helpers; command output keeps raw integers.
"""

from datetime import timedelta

import humanize


def humanize_number(value: int | float) -> str:
    """Converts a number into a human-readable format (e.g., 1,000,000 -> '1.0 million').

    Args:
        value (int or float): The number to humanize.

    Returns:
        str: Human-readable string.

    Example:
        >>> humanize_number(993701908)
        '993.7 million'
    """
    return humanize.intword(value)


def humanize_count(value: int) -> str:
    """Groups the digits of an exact count.

    Example:
        >>> humanize_count(39590576)
        '39,590,576'
    """
    return humanize.intcomma(value)


def humanize_duration(seconds: int | float) -> str:
    """Converts seconds into a human-readable duration.

    Sub-second durations are rendered in milliseconds since most runs finish well below a second.

    Args:
        seconds (int or float): Duration in seconds.

    Returns:
        str: Human-readable duration.

    Example:
        >>> humanize_duration(3661)
        'an hour'
    """
    return humanize.naturaldelta(timedelta(seconds=seconds), minimum_unit="milliseconds")
