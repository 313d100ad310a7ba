"""Reports produced by validation, p-adic checks and structure conversion."""

from pydantic import BaseModel, ConfigDict, Field, computed_field


class ValidationReport(BaseModel):
    """Pass/fail per criterion for one candidate solution.

    ``distinct_ok`` and ``form_ok`` are None when the criterion was not requested.
    """

    values: list[int] = Field(..., description="The candidate, in input order")
    reciprocal_sum: str = Field(..., description="Exact reciprocal sum as a reduced fraction")
    sum_is_one: bool
    distinct_ok: bool | None = None
    form_ok: bool | None = None
    prime: int | None = Field(None, description="Odd prime of the requested 2^a*q^b form")
    max_a: int | None = Field(None, description="Largest exponent of 2 allowed by the form")
    failures: list[str] = Field(default_factory=list, description="Human-readable reasons for each failed criterion")

    @computed_field  # type: ignore[prop-decorator]
    @property
    def passed(self) -> bool:
        """Whether every requested criterion holds."""
        return not self.failures


class PadicProfile(BaseModel):
    """Where the highest power of p sits in a solution."""

    model_config = ConfigDict(frozen=True)

    p: int
    alpha: int = Field(..., ge=0, description="Highest p-adic valuation among the denominators")
    s: int = Field(..., ge=0, description="Number of denominators reaching alpha")
    occurrences: tuple[int, ...] = Field(..., description="Zero-based indices reaching alpha")
    cofactors: tuple[int, ...] = Field(..., description="x / p^alpha at those indices")
    runner_up: int = Field(0, ge=0, description="Highest valuation outside the occurrences, 0 if none")


class PadicCheck(BaseModel):
    """Divisibility properties every solution satisfies at a prime p.

    ``at_least_twice``: the top power of p occurs twice or more.
    ``cofactor_divisibility``: the runner-up valuation is below alpha and p^(alpha - runner_up) divides
    sigma_(s-1) of the cofactors.
    ``cofactor_exact``: that valuation is exactly alpha - runner_up; only checked (non-None) when the
    runner-up valuation is attained once and is positive.
    ``subsets_coprime``: sigma_(s-2) of every (s-1)-subset of the cofactors is prime to p.
    ``even_occurrences``: s is even; binding only for p=2 on nine distinct terms with an even term.
    """

    profile: PadicProfile
    at_least_twice: bool
    cofactor_divisibility: bool
    cofactor_exact: bool | None = None
    subsets_coprime: bool
    even_occurrences: bool | None = None
    even_occurrences_enforced: bool = False

    @computed_field  # type: ignore[prop-decorator]
    @property
    def passed(self) -> bool:
        """Every binding property holds."""
        checks = [self.at_least_twice, self.cofactor_divisibility, self.subsets_coprime]
        if self.cofactor_exact is not None:
            checks.append(self.cofactor_exact)
        if self.even_occurrences_enforced:
            checks.append(bool(self.even_occurrences))
        return all(checks)


class PadicReport(BaseModel):
    """p-adic checks at every prime dividing some denominator."""

    values: list[int]
    checks: list[PadicCheck] = Field(default_factory=list)

    @computed_field  # type: ignore[prop-decorator]
    @property
    def passed(self) -> bool:
        """All primes pass."""
        return all(check.passed for check in self.checks)


class ArithmeticalStructure(BaseModel):
    """A pair (d, r) with (diag(d) - A) r = 0 for the adjacency matrix A of the complete graph."""

    model_config = ConfigDict(frozen=True)

    n: int = Field(..., ge=1)
    d: tuple[int, ...] = Field(..., description="Diagonal entries, non-negative")
    r: tuple[int, ...] = Field(..., description="Positive weights with gcd 1")


class VerificationSummary(BaseModel):
    """Validation results for a batch of candidates."""

    total: int = Field(..., ge=0)
    passed: int = Field(..., ge=0)
    failed: int = Field(..., ge=0)
    reports: list[ValidationReport] = Field(default_factory=list)
    padic: list[PadicReport] = Field(default_factory=list, description="Present only when requested")
