"""Brute-force references and hypothesis strategies shared by the tests."""

from __future__ import annotations

import itertools

from hypothesis import strategies as st

from mincount_dfa.automata import Alphabet, Dfa, accepts

AB = Alphabet.from_letters("ab")


def all_words(sigma: int, max_length: int):
    for length in range(max_length + 1):
        yield from itertools.product(range(sigma), repeat=length)


def brute_count(dfa: Dfa, m: int) -> int:
    return sum(1 for w in all_words(dfa.sigma, m) if accepts(dfa, w))


def words(text: str, alphabet: Alphabet = AB) -> list[tuple[int, ...]]:
    """'a ab eps' -> word tuples."""
    return [() if token == "eps" else alphabet.word(token) for token in text.split()]


@st.composite
def dfas(draw, max_states: int = 4, sigma: int | None = None, max_sigma: int = 3):
    size = sigma if sigma is not None else draw(st.integers(1, max_sigma))
    n = draw(st.integers(1, max_states))
    delta = tuple(tuple(draw(st.integers(0, n - 1)) for _ in range(size)) for _ in range(n))
    final = draw(st.frozensets(st.integers(0, n - 1)))
    init = draw(st.integers(0, n - 1))
    return Dfa(Alphabet.of_size(size), delta, final, init)


@st.composite
def word_lists(draw, sigma: int, max_words: int = 4, max_length: int = 4):
    return draw(
        st.lists(st.lists(st.integers(0, sigma - 1), max_size=max_length).map(tuple), max_size=max_words)
    )
