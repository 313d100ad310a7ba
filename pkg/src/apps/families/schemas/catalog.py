"""Labelled solutions and their classification signature."""

from pydantic import BaseModel, ConfigDict, Field

from src.apps.core.schemas.values import SolutionSet


class CatalogEntry(BaseModel):
    """One named solution."""

    model_config = ConfigDict(frozen=True)

    label: str = Field(..., min_length=1, description="ASCII label, e.g. X_3 or Zhat_1")
    solution: SolutionSet = Field(..., description="The denominators in fixture order")

    @property
    def n(self) -> int:
        """Number of unit fractions."""
        return self.solution.n

    @property
    def prime(self) -> int | None:
        """Odd prime of the 2^a*q^b form, None for unrestricted solutions."""
        return self.solution.prime


class FixtureCatalog(BaseModel):
    """An ordered, label-unique collection of catalog entries."""

    model_config = ConfigDict(frozen=True)

    entries: tuple[CatalogEntry, ...] = Field(default_factory=tuple)

    def __len__(self) -> int:
        return len(self.entries)

    @property
    def labels(self) -> list[str]:
        """Labels in fixture order."""
        return [entry.label for entry in self.entries]

    def get(self, label: str) -> CatalogEntry | None:
        """Entry by label, or None."""
        return next((entry for entry in self.entries if entry.label == label), None)

    def with_n(self, n: int) -> "FixtureCatalog":
        """Entries solving the n-term equation."""
        return FixtureCatalog(entries=tuple(entry for entry in self.entries if entry.n == n))

    def with_prime(self, prime: int) -> "FixtureCatalog":
        """Entries of the form 2^a*prime^b."""
        return FixtureCatalog(entries=tuple(entry for entry in self.entries if entry.prime == prime))


class SolutionSignature(BaseModel):
    """Coarse invariants used to classify a 2^a*q^b solution."""

    model_config = ConfigDict(frozen=True)

    contains_two: bool = Field(..., description="Whether 2 itself is a denominator")
    alpha_2: int = Field(..., ge=0, description="Highest 2-adic valuation among the denominators")
    prime: int | None = Field(None, description="The odd prime q, None if there is none or several")
    alpha_q: int = Field(0, ge=0, description="Highest q-adic valuation")
    s_q: int = Field(0, ge=0, description="How many denominators reach alpha_q")
