"""
Unary DFA families that attain the comparison-length and horizon bounds.

- `ring_dfa(n, final)`: q_i -a-> q_{i+1}, q_{n-1} -a-> q_0, one final state.
- `chain_dfa(m)`: q_i -a-> q_{i+1}, q_{m-1} loops, final q_{m-2}; accepts only a^{m-2}.

For 2 <= m <= n, chain_dfa(m) and ring_dfa(n, m-2) first differ on a^{m+n-2}.
"""

from __future__ import annotations

from .automata import Alphabet, Dfa

UNARY = Alphabet(("a",))


def ring_dfa(n: int, final: int) -> Dfa:
    if n < 1 or not 0 <= final < n:
        raise ValueError("need n >= 1 and 0 <= final < n")
    delta = tuple(((q + 1) % n,) for q in range(n))
    return Dfa(UNARY, delta, frozenset({final}))


def chain_dfa(m: int) -> Dfa:
    if m < 2:
        raise ValueError("need m >= 2")
    delta = tuple((min(q + 1, m - 1),) for q in range(m))
    return Dfa(UNARY, delta, frozenset({m - 2}))


def horizon_pair(n: int) -> tuple[Dfa, Dfa]:
    """(A_n, A'_n): the ring accepting a^{n-2} modulo n, and its sink variant accepting only a^{n-2}."""
    if n < 2:
        raise ValueError("need n >= 2")
    return ring_dfa(n, n - 2), chain_dfa(n)
