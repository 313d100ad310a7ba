"""Loading and querying the labelled solution fixtures.

Two plain-text fixtures live next to this app:

* ``theorem1.txt``: ``LABEL PRIME (a,b),(a,b),...`` with every denominator written as 2^a*PRIME^b;
* ``burshtein.txt``: ``LABEL x1,x2,...`` with plain integers.

Lines starting with ``#`` and blank lines are ignored.
"""

import functools
import logging
import re
import unicodedata

from pathlib import Path

from django.conf import settings
from sympy import primefactors

from src.apps.core.schemas.values import FactoredValue, SolutionSet
from src.apps.core.services.arithmetic import valuation
from src.apps.families.schemas.catalog import CatalogEntry, FixtureCatalog, SolutionSignature
from src.apps.shared.exceptions import DomainError


logger = logging.getLogger(__name__)

_FIXTURE_DIR = settings.BASE_DIR / "apps" / "families" / "fixtures"
THEOREM1_FIXTURE = _FIXTURE_DIR / "theorem1.txt"
BURSHTEIN_FIXTURE = _FIXTURE_DIR / "burshtein.txt"

_PAIR = re.compile(r"\((\d+),(\d+)\)")
_HATS = {"Zhat_": "Ẑ_", "That_": "T̂_"}


def _data_lines(path: Path) -> list[tuple[int, str]]:
    if not path.exists():
        raise DomainError(f"Fixture file not found: {path}", code="fixture_missing")
    with path.open("r", encoding="utf-8") as f:
        stripped = ((number, line.strip()) for number, line in enumerate(f, start=1))
        return [(number, line) for number, line in stripped if line and not line.startswith("#")]


def _parse_factored(path: Path, number: int, line: str) -> CatalogEntry:
    try:
        label, prime, pairs = line.split(maxsplit=2)
        q = int(prime)
    except ValueError as e:
        raise DomainError(f"{path.name}:{number}: expected 'LABEL PRIME PAIRS'", code="fixture_format") from e

    exponents = _PAIR.findall(pairs)
    if not exponents or _PAIR.sub("", pairs).strip(", ") != "":
        raise DomainError(f"{path.name}:{number}: malformed exponent pairs", code="fixture_format")

    try:
        factored = [FactoredValue(a=int(a), b=int(b), q=q) for a, b in exponents]
    except ValueError as e:
        raise DomainError(f"{path.name}:{number}: {e}", code="fixture_format") from e
    return CatalogEntry(label=label, solution=SolutionSet.from_factored(factored))


def _parse_plain(path: Path, number: int, line: str) -> CatalogEntry:
    try:
        label, values = line.split()
        solution = SolutionSet(values=tuple(int(v) for v in values.split(",")), prime=None)
    except ValueError as e:
        raise DomainError(f"{path.name}:{number}: expected 'LABEL x1,x2,...'", code="fixture_format") from e
    return CatalogEntry(label=label, solution=solution)


def load_catalog(path: Path, *, factored: bool = True) -> FixtureCatalog:
    """Read a fixture file into a catalog.

    Args:
        path: Fixture to read.
        factored: Exponent-pair format (True) or plain integers (False).

    Returns:
        FixtureCatalog: Entries in file order.

    Raises:
        DomainError: On a missing file, a malformed line, a repeated label or an entry whose
            reciprocals do not sum to 1.
    """
    parse = _parse_factored if factored else _parse_plain
    entries: list[CatalogEntry] = []
    seen: set[str] = set()

    for number, line in _data_lines(path):
        entry = parse(path, number, line)
        if entry.label in seen:
            raise DomainError(f"{path.name}:{number}: duplicate label {entry.label}", code="fixture_format")
        if not entry.solution.is_exact():
            raise DomainError(f"{path.name}:{number}: {entry.label} does not sum to 1", code="fixture_inexact")
        seen.add(entry.label)
        entries.append(entry)

    logger.debug("Loaded %d catalog entries from %s", len(entries), path.name)
    return FixtureCatalog(entries=tuple(entries))


@functools.cache
def catalog_theorem1() -> FixtureCatalog:
    """The 54 labelled nine-term solutions: 52 with q=3, then U (q=5) and V (q=7)."""
    return load_catalog(THEOREM1_FIXTURE)


@functools.cache
def burshtein_solutions() -> FixtureCatalog:
    """Five nine-term solutions in distinct odd integers."""
    return load_catalog(BURSHTEIN_FIXTURE, factored=False)


def catalog_entry(label: str) -> CatalogEntry:
    """Look a label up in both fixtures.

    Raises:
        DomainError: If no fixture carries ``label``.
    """
    entry = catalog_theorem1().get(label) or burshtein_solutions().get(label)
    if entry is None:
        raise DomainError(f"unknown catalog label {label}", code="unknown_label")
    return entry


def display_label(label: str) -> str:
    """Render an ASCII label with its hat, e.g. ``Zhat_2`` as Z-circumflex_2."""
    for ascii_prefix, rendered in _HATS.items():
        if label.startswith(ascii_prefix):
            return unicodedata.normalize("NFC", rendered + label.removeprefix(ascii_prefix))
    return label


def signature(solution: SolutionSet) -> SolutionSignature:
    """Whether 2 occurs, the top 2-valuation and, for a single odd prime, its top valuation and multiplicity."""
    values = solution.values
    alpha_2 = max(int(valuation(x, 2)) for x in values)

    odd_primes = {p for x in values for p in primefactors(x) if p != 2}  # noqa: PLR2004
    if len(odd_primes) != 1:
        return SolutionSignature(contains_two=2 in values, alpha_2=alpha_2)

    q = odd_primes.pop()
    q_valuations = [int(valuation(x, q)) for x in values]
    alpha_q = max(q_valuations)
    return SolutionSignature(
        contains_two=2 in values,
        alpha_2=alpha_2,
        prime=q,
        alpha_q=alpha_q,
        s_q=q_valuations.count(alpha_q),
    )
