"""
Symbolic finite word sets built from literal blocks, concatenation and union.

Counting multiplies and adds part sizes, so it is exact only for unambiguous
concatenations and disjoint unions. The reduction strata are built that way
and the tests cross-check `count()` against the expanded sets.
"""

from __future__ import annotations

from abc import ABC, abstractmethod
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass, field
from functools import cached_property
from math import prod

from .automata import Word


class WordSet(ABC):
    @abstractmethod
    def count(self) -> int: ...

    @abstractmethod
    def min_length(self) -> int: ...

    @abstractmethod
    def max_length(self) -> int: ...

    @abstractmethod
    def image(self, delta: Sequence[Sequence[int]], states: frozenset[int]) -> frozenset[int]:
        """States reached by reading any word of the set from any of `states`."""

    @abstractmethod
    def contains(self, word: Word) -> bool: ...

    @abstractmethod
    def __iter__(self) -> Iterator[Word]: ...


@dataclass(frozen=True)
class Words(WordSet):
    words: tuple[Word, ...]

    def __post_init__(self) -> None:
        unique = tuple(dict.fromkeys(tuple(w) for w in self.words))
        object.__setattr__(self, "words", unique)

    @cached_property
    def _members(self) -> frozenset[Word]:
        return frozenset(self.words)

    def count(self) -> int:
        return len(self.words)

    def min_length(self) -> int:
        return min((len(w) for w in self.words), default=0)

    def max_length(self) -> int:
        return max((len(w) for w in self.words), default=0)

    def image(self, delta, states):
        reached = set()
        for q in states:
            for w in self.words:
                p = q
                for sym in w:
                    p = delta[p][sym]
                reached.add(p)
        return frozenset(reached)

    def contains(self, word: Word) -> bool:
        return tuple(word) in self._members

    def __iter__(self) -> Iterator[Word]:
        return iter(self.words)


@dataclass(frozen=True)
class Concat(WordSet):
    parts: tuple[WordSet, ...] = field(default_factory=tuple)

    def count(self) -> int:
        return prod(p.count() for p in self.parts)

    def min_length(self) -> int:
        return sum(p.min_length() for p in self.parts)

    def max_length(self) -> int:
        return sum(p.max_length() for p in self.parts)

    def image(self, delta, states):
        for part in self.parts:
            if not states:
                break
            states = part.image(delta, states)
        return states

    def contains(self, word: Word) -> bool:
        return self._match(tuple(word), 0, 0)

    def _match(self, word: Word, start: int, index: int) -> bool:
        if index == len(self.parts):
            return start == len(word)
        part = self.parts[index]
        rest_min = sum(p.min_length() for p in self.parts[index + 1:])
        lo = start + part.min_length()
        hi = min(start + part.max_length(), len(word) - rest_min)
        for end in range(lo, hi + 1):
            if part.contains(word[start:end]) and self._match(word, end, index + 1):
                return True
        return False

    def __iter__(self) -> Iterator[Word]:
        return self._expand(0)

    def _expand(self, index: int) -> Iterator[Word]:
        if index == len(self.parts):
            yield ()
            return
        for head in self.parts[index]:
            for tail in self._expand(index + 1):
                yield head + tail


@dataclass(frozen=True)
class Union(WordSet):
    parts: tuple[WordSet, ...] = field(default_factory=tuple)

    def count(self) -> int:
        return sum(p.count() for p in self.parts)

    def min_length(self) -> int:
        return min((p.min_length() for p in self.parts), default=0)

    def max_length(self) -> int:
        return max((p.max_length() for p in self.parts), default=0)

    def image(self, delta, states):
        reached: set[int] = set()
        for part in self.parts:
            reached |= part.image(delta, states)
        return frozenset(reached)

    def contains(self, word: Word) -> bool:
        return any(p.contains(word) for p in self.parts)

    def __iter__(self) -> Iterator[Word]:
        for part in self.parts:
            yield from part


def literal(*words: Word) -> Words:
    return Words(tuple(tuple(w) for w in words))


def power(symbol: int, exponent: int) -> Words:
    return Words(((symbol,) * exponent,))


def powers(symbol: int, exponents: Iterable[int]) -> Words:
    return Words(tuple((symbol,) * e for e in exponents))


def pumped(alpha: int, beta: int, i: int) -> Words:
    """{beta^x . alpha | 1 <= x <= i}: i words."""
    return Words(tuple((beta,) * x + (alpha,) for x in range(1, i + 1)))


def concat(*parts: WordSet) -> Concat:
    return Concat(tuple(parts))


def union(*parts: WordSet) -> Union:
    return Union(tuple(parts))
