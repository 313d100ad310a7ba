"""Results of the closed recurrence systems."""

from typing import Literal

from pydantic import BaseModel, ConfigDict, Field, computed_field

from src.apps.automaton.models import AutomatonState, Order


class CountVector(BaseModel):
    """Leaf counts per top-level order at one n, plus the two auxiliary sequences.

    ``st`` counts Starthree subtrees, ``t`` RedStartwo and ``p`` RedStarthree.
    """

    model_config = ConfigDict(frozen=True)

    n: int = Field(..., ge=3)
    tri: int = Field(0, ge=0)
    sq: int = Field(0, ge=0)
    ast: int = Field(0, ge=0)
    dia: int = Field(0, ge=0)
    st1: int = Field(0, ge=0)
    st2: int = Field(0, ge=0)
    st: int = Field(0, ge=0)
    t: int = Field(0, ge=0)
    p: int = Field(0, ge=0)

    def as_tuple(self) -> tuple[int, ...]:
        """The nine components in the order (tri, sq, ast, dia, St1, St2, St, t, p)."""
        return (self.tri, self.sq, self.ast, self.dia, self.st1, self.st2, self.st, self.t, self.p)

    @computed_field  # type: ignore[prop-decorator]
    @property
    def total(self) -> int:
        """Sum of the first seven components."""
        return sum(self.as_tuple()[:7])

    def by_order(self) -> dict[tuple[AutomatonState, Order], int]:
        """Components keyed like ``count_by_order`` (seven top-level pairs)."""
        one, two = AutomatonState.ONE, AutomatonState.TWO
        return {
            (one, Order.TRIANGLE): self.tri,
            (one, Order.SQUARE): self.sq,
            (one, Order.STARONE): self.st1,
            (one, Order.STARTWO): self.st2,
            (one, Order.STARTHREE): self.st,
            (two, Order.ASTERISK): self.ast,
            (two, Order.DIAMOND): self.dia,
        }


class NodeCountState(BaseModel):
    """Leaf-type tallies of one search tree at a given depth."""

    model_config = ConfigDict(frozen=True)

    tree: Literal[1, 2]
    depth: int = Field(..., ge=1)
    a2: int = Field(..., ge=0, description="Fans of two edges")
    a5: int = Field(..., ge=0, description="Fans of five edges")
    a_heart: int = Field(..., ge=0, description="Two-edge fans that reproduce themselves")

    @property
    def nodes(self) -> int:
        """N_i(d) = 2*a2 + 5*a5 + 2*a_heart."""
        return 2 * self.a2 + 5 * self.a5 + 2 * self.a_heart


class DepthBounds(BaseModel):
    """Minimal and maximal leaf depths of both trees and the bounds they give."""

    model_config = ConfigDict(frozen=True)

    n: int
    d1_min: int
    d2_min: int
    d_max: int
    lower: int = Field(..., description="N_1(d1_min) + N_2(d2_min)")
    upper: int = Field(..., description="N_1(d_max) + N_2(d_max)")


class BoundsDiagnostic(BaseModel):
    """Whether the depth bounds bracket the actual count, under both readings of d_max."""

    n: int
    count: int = Field(..., description="Number of q=3 solutions from the automaton")
    stated: DepthBounds = Field(..., description="Bounds with d_max = n - 3")
    alternative: DepthBounds = Field(..., description="Bounds with d_max = n - 4")
    status: Literal["holds", "erratum"]
    note: str = ""

    def as_line(self) -> str:
        """One-line rendering for the CLI."""
        line = (
            f"n={self.n} d_min=({self.stated.d1_min},{self.stated.d2_min}) lower={self.stated.lower} "
            f"count={self.count} upper(n-3)={self.stated.upper} upper(n-4)={self.alternative.upper} "
            f"{self.status}"
        )
        return f"{line} ({self.note})" if self.note else line
