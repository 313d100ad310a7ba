"""Arithmetical structures on the complete graph K_n from unit-fraction solutions."""

import math

import numpy as np

from src.apps.analysis.schemas.reports import ArithmeticalStructure
from src.apps.core.schemas.values import SolutionSet
from src.apps.shared.exceptions import DomainError, InvariantViolation


def complete_graph_adjacency(n: int) -> np.ndarray:
    """Adjacency matrix of K_n as an object array of Python ints."""
    return np.ones((n, n), dtype=object) - np.eye(n, dtype=int).astype(object)


def to_structure(solution: SolutionSet) -> ArithmeticalStructure:
    """Turn a solution into (d, r) with (diag(d) - A) r = 0.

    r_i = L / x_i over the lcm L (already coprime as a vector) and d_i = (sum(r) - r_i) / r_i, which is
    x_i - 1 for an exact solution.

    Example:
        >>> to_structure(SolutionSet(values=(2, 3, 6), prime=None)).d
        (1, 2, 5)

    Raises:
        DomainError: If the reciprocals do not sum to 1.
        InvariantViolation: If the matrix identity fails.
    """
    if not solution.is_exact():
        raise DomainError(f"{solution.as_braces()} is not a solution", code="not_a_solution")

    values = solution.values
    common = math.lcm(*values)
    weights = [common // x for x in values]
    divisor = math.gcd(*weights)
    r = [w // divisor for w in weights]

    total = sum(r)
    if any((total - ri) % ri for ri in r):
        raise InvariantViolation(f"no integral diagonal for {solution.as_braces()}", code="structure_identity")
    d = [(total - ri) // ri for ri in r]

    n = len(values)
    laplacian = np.diag(np.array(d, dtype=object)) - complete_graph_adjacency(n)
    if any(laplacian.dot(np.array(r, dtype=object))):
        raise InvariantViolation(f"(diag(d) - A) r != 0 for {solution.as_braces()}", code="structure_identity")

    return ArithmeticalStructure(n=n, d=tuple(int(v) for v in d), r=tuple(int(v) for v in r))
