"""Output formats of the solution emitters."""

from django.db import models


class OutputFormat(models.TextChoices):
    """Serialisations understood by :func:`emit`."""

    TEXT = "text", "Text"
    JSON = "json", "JSON"
    CSV = "csv", "CSV"
