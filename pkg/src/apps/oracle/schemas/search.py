"""Inputs and verdicts of the brute-force oracles."""

from typing import Self

from pydantic import BaseModel, ConfigDict, Field, computed_field, model_validator


class CandidatePool(BaseModel):
    """Every 2^a*q^b >= 2 with a <= max_a and b <= max_b, ascending."""

    model_config = ConfigDict(frozen=True)

    q: int = Field(..., description="Odd prime")
    max_a: int = Field(2, ge=0, description="Largest exponent of 2")
    max_b: int = Field(..., ge=1, description="Exponent cap B on q")
    values: tuple[int, ...] = Field(..., description="Sorted distinct candidates")

    @model_validator(mode="after")
    def _well_formed(self) -> Self:
        if list(self.values) != sorted(set(self.values)):
            raise ValueError("pool values must be strictly increasing")
        if 1 in self.values:
            raise ValueError("1 is never a candidate")
        if len(self.values) != (self.max_a + 1) * (self.max_b + 1) - 1:
            raise ValueError("pool size does not match its exponent caps")
        return self


class OracleVerdict(BaseModel):
    """Brute-force result set against the reference family for the same (n, q)."""

    n: int
    q: int
    cap: int = Field(..., description="Exponent cap B used for the search")
    found: list[list[int]] = Field(default_factory=list, description="Oracle solutions, each sorted ascending")
    reference: list[list[int]] = Field(default_factory=list, description="Reference solutions, each sorted")
    missing: list[list[int]] = Field(default_factory=list, description="In the reference but not found")
    extra: list[list[int]] = Field(default_factory=list, description="Found but not in the reference")

    @computed_field  # type: ignore[prop-decorator]
    @property
    def matches(self) -> bool:
        """Whether both sides hold the same family of sets."""
        return not self.missing and not self.extra
