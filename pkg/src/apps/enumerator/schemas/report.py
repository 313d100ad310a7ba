"""Serialised enumeration results."""

from pydantic import BaseModel, Field


class EnumerationReport(BaseModel):
    """JSON shape of an enumeration run."""

    n: int = Field(..., ge=1, description="Number of unit fractions")
    prime: int = Field(3, description="Odd prime q of the denominators")
    count: int = Field(..., ge=0, description="Number of solutions")
    solutions: list[list[int]] = Field(default_factory=list, description="Solutions in output order")


class EmissionSummary(BaseModel):
    """What an emitter wrote."""

    n: int
    format: str
    count: int = Field(..., ge=0)
