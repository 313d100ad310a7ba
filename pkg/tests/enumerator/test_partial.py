import pytest

from src.apps.automaton.schemas.rules import DeferredEmission, LiteralEmission
from src.apps.enumerator.schemas.partial import DeferredEntry, LiteralEntry
from src.apps.shared.exceptions import InvariantViolation
from tests.factories import PartialSolutionFactory


def test_extend_prepends_and_tags_against_the_counter():
    partial = PartialSolutionFactory.build(counter=3).extend([DeferredEmission(coef=1)])
    partial = partial.extend([LiteralEmission(value=4), DeferredEmission(coef=2, delta=1)])
    assert partial.entries == (
        LiteralEntry(value=4),
        DeferredEntry(coef=2, tag=4),
        DeferredEntry(coef=1, tag=3),
    )


def test_advance_moves_only_the_counter():
    partial = PartialSolutionFactory.build().extend([DeferredEmission(coef=1)]).advance(2)
    assert partial.counter == 2
    assert partial.entries == (DeferredEntry(coef=1, tag=0),)


def test_seed_pair_resolved_at_one():
    seeds = PartialSolutionFactory.build().extend([DeferredEmission(coef=1), DeferredEmission(coef=2)])
    assert seeds.materialize(1) == (3, 6)


def test_negative_exponent_is_an_invariant_violation():
    partial = PartialSolutionFactory.build(counter=5).extend([DeferredEmission(coef=4)])
    with pytest.raises(InvariantViolation):
        partial.materialize(4)
