"""
Alphabets, words and total deterministic automata.

Symbols are dense indices 0..σ-1; an Alphabet only carries the names used to
render them. Words are plain tuples of symbol indices, () being the empty word.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field

from .errors import AlphabetMismatchError, InvalidDfaError, InvalidWordError

Word = tuple[int, ...]
EMPTY_WORD: Word = ()


@dataclass(frozen=True)
class Alphabet:
    symbols: tuple[str, ...]

    def __post_init__(self) -> None:
        symbols = tuple(str(s) for s in self.symbols)
        if not symbols:
            raise InvalidWordError("alphabet must not be empty")
        if len(set(symbols)) != len(symbols):
            raise InvalidWordError(f"alphabet has duplicate symbols: {symbols}")
        object.__setattr__(self, "symbols", symbols)

    @classmethod
    def of_size(cls, sigma: int) -> "Alphabet":
        if sigma < 1:
            raise InvalidWordError("alphabet size must be at least 1")
        return cls(tuple(str(i) for i in range(sigma)))

    @classmethod
    def from_letters(cls, letters: str) -> "Alphabet":
        return cls(tuple(letters))

    @property
    def size(self) -> int:
        return len(self.symbols)

    def index(self, symbol: str) -> int:
        try:
            return self.symbols.index(symbol)
        except ValueError:
            raise InvalidWordError(f"unknown symbol {symbol!r}") from None

    def word(self, text: str) -> Word:
        """Word from single-character symbols, e.g. `Alphabet.from_letters("ab").word("abb")`."""
        return tuple(self.index(ch) for ch in text)

    def render(self, word: Sequence[int]) -> str:
        if not word:
            return "eps"
        names = [self.symbols[i] for i in word]
        if all(len(n) == 1 for n in self.symbols):
            return "".join(names)
        return ".".join(names)


def validate_word(alphabet: Alphabet, word: Sequence[int]) -> Word:
    sigma = alphabet.size
    for pos, sym in enumerate(word):
        if not isinstance(sym, int) or isinstance(sym, bool) or not 0 <= sym < sigma:
            raise InvalidWordError(f"symbol {sym!r} at position {pos} is not in 0..{sigma - 1}")
    return tuple(word)


def ensure_same_alphabet(a: Alphabet, b: Alphabet) -> None:
    if a.size != b.size:
        raise AlphabetMismatchError(f"alphabet sizes differ: {a.size} vs {b.size}")


@dataclass(frozen=True)
class Dfa:
    """Total DFA. `delta[q][a]` is the successor of state q on symbol a."""

    alphabet: Alphabet
    delta: tuple[tuple[int, ...], ...]
    final: frozenset[int] = field(default_factory=frozenset)
    init: int = 0

    def __post_init__(self) -> None:
        sigma = self.alphabet.size
        rows = tuple(tuple(int(t) for t in row) for row in self.delta)
        n = len(rows)
        if n == 0:
            raise InvalidDfaError("a DFA needs at least one state")
        for q, row in enumerate(rows):
            if len(row) != sigma:
                raise InvalidDfaError(f"state {q} has {len(row)} transitions, expected {sigma}")
            for a, target in enumerate(row):
                if not 0 <= target < n:
                    raise InvalidDfaError(f"delta({q},{a}) = {target} is not a state")
        final = frozenset(int(q) for q in self.final)
        bad = [q for q in final if not 0 <= q < n]
        if bad:
            raise InvalidDfaError(f"final states out of range: {sorted(bad)}")
        if not 0 <= self.init < n:
            raise InvalidDfaError(f"initial state {self.init} out of range")
        object.__setattr__(self, "delta", rows)
        object.__setattr__(self, "final", final)

    @property
    def n_states(self) -> int:
        return len(self.delta)

    @property
    def sigma(self) -> int:
        return self.alphabet.size

    def with_final(self, final: Iterable[int]) -> "Dfa":
        return Dfa(self.alphabet, self.delta, frozenset(final), self.init)

    def canonical(self) -> "Dfa":
        """Same automaton with the initial state relabelled to 0 (swapped with state 0)."""
        if self.init == 0:
            return self
        i = self.init

        def rename(q: int) -> int:
            if q == i:
                return 0
            if q == 0:
                return i
            return q

        order = list(range(self.n_states))
        order[0], order[i] = order[i], order[0]
        delta = tuple(tuple(rename(t) for t in self.delta[old]) for old in order)
        return Dfa(self.alphabet, delta, frozenset(rename(q) for q in self.final), 0)


def trivial_dfa(alphabet: Alphabet) -> Dfa:
    """One accepting state looping on every symbol."""
    return Dfa(alphabet, ((0,) * alphabet.size,), frozenset({0}))


def empty_dfa(alphabet: Alphabet) -> Dfa:
    return Dfa(alphabet, ((0,) * alphabet.size,), frozenset())


def delta_star(dfa: Dfa, start: int, word: Sequence[int]) -> int:
    if not 0 <= start < dfa.n_states:
        raise InvalidDfaError(f"state {start} out of range")
    validate_word(dfa.alphabet, word)
    q = start
    delta = dfa.delta
    for sym in word:
        q = delta[q][sym]
    return q


def accepts(dfa: Dfa, word: Sequence[int]) -> bool:
    return delta_star(dfa, dfa.init, word) in dfa.final
