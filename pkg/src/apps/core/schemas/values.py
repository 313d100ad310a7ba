"""Value schemas shared by every search: factored denominators and solution sets."""

from fractions import Fraction
from typing import Self

from pydantic import BaseModel, ConfigDict, Field, computed_field, field_validator, model_validator
from sympy import isprime


class FactoredValue(BaseModel):
    """A denominator written as 2^a * q^b."""

    model_config = ConfigDict(frozen=True)

    a: int = Field(..., ge=0, description="Exponent of 2")
    b: int = Field(..., ge=0, description="Exponent of the odd prime q")
    q: int = Field(..., description="Odd prime base")

    @field_validator("q")
    @classmethod
    def _odd_prime(cls, q: int) -> int:
        if q == 2 or not isprime(q):  # noqa: PLR2004
            raise ValueError(f"{q} is not an odd prime")
        return q

    @model_validator(mode="after")
    def _excludes_one(self) -> Self:
        if self.a == 0 and self.b == 0:
            raise ValueError("the value 1 is never a candidate denominator")
        return self

    @property
    def value(self) -> int:
        """Exact integer value."""
        return 2**self.a * self.q**self.b

    @classmethod
    def from_int(cls, x: int, q: int) -> "FactoredValue":
        """Factor ``x`` over {2, q}.

        Raises:
            DomainError: If ``x`` has any other prime factor.
        """
        from src.apps.core.services.arithmetic import valuation  # noqa: PLC0415
        from src.apps.shared.exceptions import DomainError  # noqa: PLC0415

        if x < 2:  # noqa: PLR2004
            raise DomainError(f"{x} is not a candidate denominator")
        a, b = valuation(x, 2), valuation(x, q)
        if 2**a * q**b != x:
            raise DomainError(f"{x} is not of the form 2^a*{q}^b", code="form_violation")
        return cls(a=a, b=b, q=q)

    def __str__(self) -> str:
        parts = [f"2^{self.a}" if self.a > 1 else "2"] if self.a else []
        if self.b:
            parts.append(f"{self.q}^{self.b}" if self.b > 1 else str(self.q))
        return ".".join(parts)


class SolutionSet(BaseModel):
    """An ordered candidate solution of 1/x_1 + ... + 1/x_n = 1.

    Producers only build exact solutions; the model itself accepts any positive integers so that
    failing candidates can be reported by ``validate_solution``.
    """

    model_config = ConfigDict(frozen=True)

    values: tuple[int, ...] = Field(..., min_length=1, description="The denominators in emission order")
    prime: int | None = Field(None, description="Odd prime q of the restricted form 2^a*q^b, if any")
    distinct: bool = Field(True, description="Whether the denominators are required to be pairwise distinct")

    @field_validator("values")
    @classmethod
    def _positive(cls, values: tuple[int, ...]) -> tuple[int, ...]:
        if any(v < 1 for v in values):
            raise ValueError("denominators must be positive integers")
        return values

    @computed_field  # type: ignore[prop-decorator]
    @property
    def n(self) -> int:
        """Number of unit fractions."""
        return len(self.values)

    @classmethod
    def from_factored(cls, factored: list[FactoredValue], distinct: bool = True) -> "SolutionSet":
        """Build a solution from exponent-form values sharing one prime."""
        primes = {f.q for f in factored}
        return cls(
            values=tuple(f.value for f in factored),
            prime=primes.pop() if len(primes) == 1 else None,
            distinct=distinct,
        )

    def reciprocal_sum(self) -> Fraction:
        """Exact sum of the reciprocals."""
        from src.apps.core.services.arithmetic import reciprocal_sum  # noqa: PLC0415

        return reciprocal_sum(list(self.values))

    def is_exact(self) -> bool:
        """Whether the reciprocals sum to exactly 1."""
        return self.reciprocal_sum() == 1

    def sorted_values(self) -> tuple[int, ...]:
        """Values in ascending order (the multiset key)."""
        return tuple(sorted(self.values))

    def as_braces(self) -> str:
        """Render as ``{v1,v2,...,vn}`` in stored order."""
        return "{" + ",".join(str(v) for v in self.values) + "}"
