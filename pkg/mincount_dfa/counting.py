"""
Exact word counting.

N(q, m) is the number of length-m words whose run from the initial state ends
in q. It satisfies N(q, m+1) = sum over q' of N(q', m) * |{a : delta(q', a) = q}|,
and the number of accepted words of length at most m is the sum of N(q, i)
over final q and i <= m. All counts are Python ints.
"""

from __future__ import annotations

from collections import Counter, defaultdict

from .automata import Dfa
from .errors import UnsupportedAlphabetError

CountVector = tuple[int, ...]


def count_vectors(dfa: Dfa, m: int) -> list[CountVector]:
    """N(., 0) .. N(., m) for every state; each vector sums to sigma**length."""
    if m < 0:
        raise ValueError("m must be non-negative")
    n = dfa.n_states
    current = [0] * n
    current[dfa.init] = 1
    vectors = [tuple(current)]
    for _ in range(m):
        nxt = [0] * n
        for q, c in enumerate(current):
            if c:
                for target in dfa.delta[q]:
                    nxt[target] += c
        current = nxt
        vectors.append(tuple(current))
    return vectors


def live_states(dfa: Dfa) -> frozenset[int]:
    """States from which some final state is reachable."""
    preds: list[list[int]] = [[] for _ in range(dfa.n_states)]
    for q, row in enumerate(dfa.delta):
        for target in row:
            preds[target].append(q)
    live = set(dfa.final)
    stack = list(dfa.final)
    while stack:
        q = stack.pop()
        for p in preds[q]:
            if p not in live:
                live.add(p)
                stack.append(p)
    return frozenset(live)


def count_accepted_up_to(dfa: Dfa, m: int) -> int:
    """|L(dfa) ∩ Σ^{<=m}|, propagating only the mass that can still be accepted."""
    if m < 0:
        raise ValueError("m must be non-negative")
    live = live_states(dfa)
    if dfa.init not in live:
        return 0
    moves: dict[int, list[tuple[int, int]]] = {}
    for q in live:
        mult = Counter(t for t in dfa.delta[q] if t in live)
        moves[q] = sorted(mult.items())
    final = dfa.final

    current: dict[int, int] = {dfa.init: 1}
    total = 0
    for length in range(m + 1):
        total += sum(c for q, c in current.items() if q in final)
        if length == m:
            break
        nxt: dict[int, int] = defaultdict(int)
        for q, c in current.items():
            for target, mult in moves[q]:
                nxt[target] += c * mult
        if not nxt:
            break
        current = nxt
    return total


def max_count(n: int, sigma: int) -> int:
    """|Σ^{<=2n-2}|, the count of the trivial accepting DFA."""
    if n < 1:
        raise ValueError("n must be positive")
    if sigma < 2:
        raise UnsupportedAlphabetError("max_count needs sigma >= 2 (use 2n-1 for a unary alphabet)")
    return (sigma ** (2 * n - 1) - 1) // (sigma - 1)


def words_up_to(sigma: int, m: int) -> int:
    """|Σ^{<=m}| for any alphabet size, unary included."""
    if sigma == 1:
        return m + 1
    return (sigma ** (m + 1) - 1) // (sigma - 1)


def completion_counts(dfa: Dfa, horizon: int) -> list[list[int]]:
    """W[l][q]: number of length-l words leading from q into a final state."""
    n = dfa.n_states
    table = [[1 if q in dfa.final else 0 for q in range(n)]]
    for _ in range(horizon):
        prev = table[-1]
        table.append([sum(prev[t] for t in dfa.delta[q]) for q in range(n)])
    return table
