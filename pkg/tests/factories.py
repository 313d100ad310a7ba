"""factory-boy factories for the value schemas."""

import factory

from src.apps.core.schemas.values import FactoredValue, SolutionSet
from src.apps.enumerator.schemas.partial import PartialSolution


class FactoredValueFactory(factory.Factory):
    """2^a*3^b with a cycling through 0..2 and b increasing."""

    class Meta:
        model = FactoredValue

    a = factory.Iterator([0, 1, 2])
    b = factory.Sequence(lambda i: i + 1)
    q = 3


class SolutionSetFactory(factory.Factory):
    """Defaults to {2, 3, 6}."""

    class Meta:
        model = SolutionSet

    values = (2, 3, 6)
    prime = 3
    distinct = True


class PartialSolutionFactory(factory.Factory):
    """An empty partial solution at counter 0."""

    class Meta:
        model = PartialSolution

    entries = ()
    counter = 0
