"""
Language comparison over the product automaton.

Both operations explore reachable state pairs breadth-first, taking pairs
in discovery order and symbols in ascending order. A pair is a mismatch
when exactly one side is final.
"""

from __future__ import annotations

from collections import deque
from enum import Enum

from .automata import Dfa, Word, ensure_same_alphabet


class LanguageRelation(str, Enum):
    EQUAL = "equal"
    A_STRICT_SUBSET_B = "a_strict_subset_b"
    B_STRICT_SUBSET_A = "b_strict_subset_a"
    INCOMPARABLE = "incomparable"


def distinguishing_witness(a: Dfa, b: Dfa) -> Word | None:
    """Length-lexicographically smallest word in the symmetric difference, or None."""
    ensure_same_alphabet(a.alphabet, b.alphabet)
    sigma = a.sigma
    start = (a.init, b.init)
    parent: dict[tuple[int, int], tuple[tuple[int, int], int] | None] = {start: None}
    queue = deque([start])
    while queue:
        pair = queue.popleft()
        p, q = pair
        if (p in a.final) != (q in b.final):
            return _trace(parent, pair)
        for sym in range(sigma):
            nxt = (a.delta[p][sym], b.delta[q][sym])
            if nxt not in parent:
                parent[nxt] = (pair, sym)
                queue.append(nxt)
    return None


def _trace(parent: dict, pair: tuple[int, int]) -> Word:
    letters: list[int] = []
    link = parent[pair]
    while link is not None:
        pair, sym = link
        letters.append(sym)
        link = parent[pair]
    return tuple(reversed(letters))


def language_relation(a: Dfa, b: Dfa) -> LanguageRelation:
    ensure_same_alphabet(a.alphabet, b.alphabet)
    sigma = a.sigma
    start = (a.init, b.init)
    seen = {start}
    queue = deque([start])
    a_only = b_only = False
    while queue:
        p, q = queue.popleft()
        in_a, in_b = p in a.final, q in b.final
        if in_a and not in_b:
            a_only = True
        elif in_b and not in_a:
            b_only = True
        if a_only and b_only:
            return LanguageRelation.INCOMPARABLE
        for sym in range(sigma):
            nxt = (a.delta[p][sym], b.delta[q][sym])
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    if a_only:
        return LanguageRelation.B_STRICT_SUBSET_A
    if b_only:
        return LanguageRelation.A_STRICT_SUBSET_B
    return LanguageRelation.EQUAL
