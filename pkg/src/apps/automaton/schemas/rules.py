"""Schemas for the guarded transition table."""

import enum

from typing import Annotated, Literal, Self

from pydantic import BaseModel, ConfigDict, Field, model_validator

from src.apps.automaton.models import AutomatonState, Order


class Leaf(enum.Enum):
    """Outcome of a terminal automaton case."""

    LEAF = "leaf"

    def __repr__(self) -> str:
        return "LEAF"


LEAF = Leaf.LEAF


class Transition(BaseModel):
    """A child triple produced by a matched rule."""

    model_config = ConfigDict(frozen=True)

    state: AutomatonState
    n: int
    order: Order


class Guard(BaseModel):
    """Match condition of a rule: a state, an order (or any order) and a condition on n."""

    model_config = ConfigDict(frozen=True)

    state: AutomatonState = Field(..., description="Automaton state the rule applies in")
    order: Order | None = Field(None, description="Order the rule applies to; None matches every order")
    values: frozenset[int] = Field(frozenset(), description="Exact values of n accepted")
    above: int | None = Field(None, description="Accept every n strictly greater than this bound")

    @model_validator(mode="after")
    def _one_condition(self) -> Self:
        if bool(self.values) == (self.above is not None):
            raise ValueError("a guard takes either exact values or a lower bound, not both")
        return self

    def matches(self, state: AutomatonState, n: int, order: Order) -> bool:
        """Whether the triple satisfies the guard."""
        if state != self.state or (self.order is not None and order != self.order):
            return False
        if self.above is not None:
            return n > self.above
        return n in self.values

    def __str__(self) -> str:
        condition = f"n>{self.above}" if self.above is not None else "n=" + "|".join(map(str, sorted(self.values)))
        order = self.order.label if self.order is not None else "_"
        return f"({self.state.value},{condition},{order})"


class LiteralEmission(BaseModel):
    """A fixed denominator, emitted verbatim."""

    model_config = ConfigDict(frozen=True)

    kind: Literal["literal"] = "literal"
    value: int = Field(..., ge=2)


class DeferredEmission(BaseModel):
    """A denominator coef*3^e whose exponent is fixed only once the leaf is reached.

    ``delta`` is added to the running counter at emission time to give the entry's tag.
    """

    model_config = ConfigDict(frozen=True)

    kind: Literal["deferred"] = "deferred"
    coef: Literal[1, 2, 4]
    delta: int = Field(0, ge=0)


Emission = Annotated[LiteralEmission | DeferredEmission, Field(discriminator="kind")]


class EmissionRule(BaseModel):
    """What a rule adds to the solution under construction."""

    model_config = ConfigDict(frozen=True)

    emissions: tuple[Emission, ...] = Field(..., description="Entries emitted, in output order")
    resolution_offset: int | None = Field(
        None, ge=0, description="Leaves only: the highest 3-exponent is counter + resolution_offset"
    )


class ChildStep(BaseModel):
    """One child of an internal rule."""

    model_config = ConfigDict(frozen=True)

    state: AutomatonState
    step: int = Field(..., ge=1, description="Unknowns consumed by the move")
    order: Order
    counter_increment: int = Field(..., ge=1)

    def target(self, n: int) -> Transition:
        """The child triple reached from ``n`` unknowns."""
        return Transition(state=self.state, n=n - self.step, order=self.order)


class TransitionRule(BaseModel):
    """One guarded case of the transition table with its emissions."""

    model_config = ConfigDict(frozen=True)

    guard: Guard
    emission: EmissionRule
    children: tuple[ChildStep, ...] = ()

    @model_validator(mode="after")
    def _consistent(self) -> Self:
        if self.is_leaf == (self.emission.resolution_offset is None):
            raise ValueError(f"rule {self.guard}: leaves and only leaves carry a resolution offset")
        for child in self.children:
            if child.order.home_state != child.state:
                raise ValueError(f"rule {self.guard}: {child.order.label} cannot run in state {child.state}")
        return self

    @property
    def is_leaf(self) -> bool:
        """Whether the rule terminates the path."""
        return not self.children
