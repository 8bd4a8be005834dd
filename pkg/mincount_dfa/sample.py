"""
Positive samples and their prefix trie.

Trie nodes are numbered breadth-first with children visited in symbol
order, so node 0 is the empty word and every parent index is smaller than
its children's. The ILP word variables use these node numbers.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field

from .automata import Alphabet, Dfa, Word, ensure_same_alphabet, validate_word


@dataclass(frozen=True)
class PrefixTrie:
    parent: tuple[int, ...]
    symbol: tuple[int, ...]
    depth: tuple[int, ...]
    terminal: tuple[bool, ...]
    children: tuple[dict[int, int], ...]

    @classmethod
    def build(cls, words: Iterable[Word]) -> "PrefixTrie":
        # insertion trie first, then breadth-first renumbering
        kids: list[dict[int, int]] = [{}]
        ends: list[bool] = [False]
        for word in words:
            node = 0
            for sym in word:
                nxt = kids[node].get(sym)
                if nxt is None:
                    nxt = len(kids)
                    kids[node][sym] = nxt
                    kids.append({})
                    ends.append(False)
                node = nxt
            ends[node] = True

        order = [0]
        new_id = {0: 0}
        parent = [-1]
        symbol = [-1]
        depth = [0]
        head = 0
        while head < len(order):
            old = order[head]
            for sym in sorted(kids[old]):
                child = kids[old][sym]
                new_id[child] = len(order)
                order.append(child)
                parent.append(new_id[old])
                symbol.append(sym)
                depth.append(depth[new_id[old]] + 1)
            head += 1

        children: list[dict[int, int]] = [{} for _ in order]
        for node in range(1, len(order)):
            children[parent[node]][symbol[node]] = node
        terminal = tuple(ends[old] for old in order)
        return cls(tuple(parent), tuple(symbol), tuple(depth), terminal, tuple(children))

    def __len__(self) -> int:
        return len(self.parent)

    def word(self, node: int) -> Word:
        letters: list[int] = []
        while node > 0:
            letters.append(self.symbol[node])
            node = self.parent[node]
        return tuple(reversed(letters))

    def terminal_nodes(self) -> list[int]:
        return [node for node, end in enumerate(self.terminal) if end]

    def run(self, delta: Sequence[Sequence[int]], start: int) -> list[int]:
        """State reached by every prefix, indexed by node."""
        states = [start] * len(self.parent)
        for node in range(1, len(self.parent)):
            states[node] = delta[states[self.parent[node]]][self.symbol[node]]
        return states


@dataclass(frozen=True)
class Sample:
    alphabet: Alphabet
    words: frozenset[Word]
    prefix_index: PrefixTrie = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        words = frozenset(validate_word(self.alphabet, w) for w in self.words)
        object.__setattr__(self, "words", words)
        object.__setattr__(self, "prefix_index", PrefixTrie.build(sorted(words, key=_length_lex)))

    @classmethod
    def from_words(cls, alphabet: Alphabet, words: Iterable[Sequence[int]]) -> "Sample":
        return cls(alphabet, frozenset(tuple(w) for w in words))

    def __len__(self) -> int:
        return len(self.words)

    def sorted_words(self) -> list[Word]:
        return sorted(self.words, key=_length_lex)

    def max_length(self) -> int:
        return max((len(w) for w in self.words), default=0)

    def count_up_to(self, m: int) -> int:
        return sum(1 for w in self.words if len(w) <= m)


def _length_lex(word: Word) -> tuple[int, Word]:
    return (len(word), word)


def reached_states(dfa_delta: Sequence[Sequence[int]], start: int, sample: Sample) -> frozenset[int]:
    """States in which the words of the sample end, from `start`."""
    trie = sample.prefix_index
    states = trie.run(dfa_delta, start)
    return frozenset(states[node] for node in trie.terminal_nodes())


def recognizes_sample(dfa: Dfa, sample: Sample) -> bool:
    ensure_same_alphabet(dfa.alphabet, sample.alphabet)
    trie = sample.prefix_index
    states = trie.run(dfa.delta, dfa.init)
    final = dfa.final
    return all(states[node] in final for node in trie.terminal_nodes())
