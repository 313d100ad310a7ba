"""Unit-fraction splitting identities."""

from django.db import models


class IdentityKind(models.TextChoices):
    """Which identity splits a term 1/x.

    FOUR_TERM: 1/x = 4/(5x) + 1/(10x) + 1/(15x) + 1/(30x), needs 4 | x.
    TWO_TERM: 1/x = 2/(3x) + 1/(3x), needs 2 | x.
    """

    FOUR_TERM = "four-term", "Four-term"
    TWO_TERM = "two-term", "Two-term"
