"""The solution under construction along one root-to-leaf path."""

from collections.abc import Iterable
from typing import Literal

from pydantic import BaseModel, ConfigDict, Field

from src.apps.automaton.schemas.rules import DeferredEmission, LiteralEmission
from src.apps.shared.exceptions import InvariantViolation


class LiteralEntry(BaseModel):
    """A denominator known at emission time."""

    model_config = ConfigDict(frozen=True)

    kind: Literal["literal"] = "literal"
    value: int = Field(..., ge=2)


class DeferredEntry(BaseModel):
    """A denominator coef*3^(A - tag), A being fixed by the leaf."""

    model_config = ConfigDict(frozen=True)

    kind: Literal["deferred"] = "deferred"
    coef: Literal[1, 2, 4]
    tag: int = Field(..., ge=0)


type Entry = LiteralEntry | DeferredEntry


class PartialSolution(BaseModel):
    """Entries emitted so far plus the running exponent counter.

    Entries are kept newest chunk first: the leaf's emissions lead the finished solution and the
    root seeds close it.
    """

    model_config = ConfigDict(frozen=True)

    entries: tuple[LiteralEntry | DeferredEntry, ...] = ()
    counter: int = Field(0, ge=0)

    def extend(self, emissions: Iterable[LiteralEmission | DeferredEmission]) -> "PartialSolution":
        """Prepend a rule's emissions, tagging deferred ones against the current counter."""
        chunk: list[LiteralEntry | DeferredEntry] = [
            LiteralEntry(value=e.value)
            if isinstance(e, LiteralEmission)
            else DeferredEntry(coef=e.coef, tag=self.counter + e.delta)
            for e in emissions
        ]
        return PartialSolution(entries=(*chunk, *self.entries), counter=self.counter)

    def advance(self, increment: int) -> "PartialSolution":
        """Move the counter down one edge."""
        return PartialSolution(entries=self.entries, counter=self.counter + increment)

    def materialize(self, resolution: int) -> tuple[int, ...]:
        """Values of every entry once the highest 3-exponent is ``resolution``.

        Raises:
            InvariantViolation: If a deferred entry would get a negative exponent.
        """
        values: list[int] = []
        for entry in self.entries:
            if isinstance(entry, LiteralEntry):
                values.append(entry.value)
                continue
            exponent = resolution - entry.tag
            if exponent < 0:
                raise InvariantViolation(
                    f"deferred entry {entry.coef}*3^({resolution}-{entry.tag}) has a negative exponent",
                    code="negative_exponent",
                )
            values.append(entry.coef * 3**exponent)
        return tuple(values)
