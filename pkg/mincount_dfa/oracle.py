"""
Exhaustive ground truth for small instances.

Tables are enumerated in row-major lexicographic order with the initial
state fixed to 0. For each table only the final set reached by the sample is
counted: every other final set accepting the sample contains it, so it can
only accept more, and its bitmask is never smaller.
"""

from __future__ import annotations

import itertools
from collections.abc import Callable, Iterator
from dataclasses import dataclass

from .automata import Dfa, ensure_same_alphabet
from .compare import LanguageRelation, language_relation
from .counting import count_accepted_up_to
from .defaults import ORACLE_GUARD
from .errors import GuardExceededError, InvalidConfigError
from .limits import Deadline, ensure_deadline
from .sample import Sample, reached_states


@dataclass(frozen=True)
class OracleResult:
    min_count: int
    witness: Dfa
    enumerated: int


def enumeration_size(n: int, sigma: int) -> int:
    return n ** (n * sigma) * 2**n


def _check_guard(n: int, sigma: int, guard: int) -> int:
    if n < 1:
        raise InvalidConfigError("n must be >= 1")
    size = enumeration_size(n, sigma)
    if size > guard:
        raise GuardExceededError(f"{size} DFAs to enumerate for n={n}, sigma={sigma} exceeds the guard of {guard}")
    return size


def _tables(n: int, sigma: int) -> Iterator[tuple[tuple[int, ...], ...]]:
    for cells in itertools.product(range(n), repeat=n * sigma):
        yield tuple(cells[q * sigma:(q + 1) * sigma] for q in range(n))


def _cheapest_dfas(p: Sample, n: int, deadline: Deadline) -> Iterator[Dfa]:
    for delta in _tables(n, p.alphabet.size):
        deadline.check()
        final = reached_states(delta, 0, p) if len(p) else frozenset()
        yield Dfa(p.alphabet, delta, final, 0)


def enumerate_min_count(
    p: Sample,
    n: int,
    *,
    horizon: int | None = None,
    guard: int = ORACLE_GUARD,
    deadline: Deadline | None = None,
    log: Callable[[str], None] | None = None,
) -> OracleResult:
    size = _check_guard(n, p.alphabet.size, guard)
    horizon = 2 * n - 2 if horizon is None else horizon
    deadline = ensure_deadline(deadline)
    if log:
        log(f"Enumerating {size} DFAs with {n} states (horizon {horizon})...")

    best: tuple[int, Dfa] | None = None
    for dfa in _cheapest_dfas(p, n, deadline):
        value = count_accepted_up_to(dfa, horizon)
        if best is None or value < best[0]:
            best = (value, dfa)
    assert best is not None
    if log:
        log(f"Minimum count {best[0]}")
    return OracleResult(min_count=best[0], witness=best[1], enumerated=size)


def decide_count_bound(p: Sample, n: int, k: int, **kwargs) -> bool:
    return enumerate_min_count(p, n, **kwargs).min_count <= k


def certify_language_minimal(
    dfa: Dfa,
    p: Sample,
    n: int,
    *,
    guard: int = ORACLE_GUARD,
    deadline: Deadline | None = None,
) -> bool:
    """True iff no n-state DFA accepting p has a language strictly inside L(dfa)."""
    ensure_same_alphabet(dfa.alphabet, p.alphabet)
    _check_guard(n, p.alphabet.size, guard)
    deadline = ensure_deadline(deadline)
    for candidate in _cheapest_dfas(p, n, deadline):
        if language_relation(candidate, dfa) is LanguageRelation.A_STRICT_SUBSET_B:
            return False
    return True
