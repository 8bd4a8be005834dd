import unittest

from support import AB, words

from mincount_dfa.automata import Alphabet, Dfa, trivial_dfa
from mincount_dfa.errors import AlphabetMismatchError, InvalidWordError
from mincount_dfa.sample import PrefixTrie, Sample, reached_states, recognizes_sample


class TestPrefixTrie(unittest.TestCase):
    def test_breadth_first_numbering(self):
        trie = PrefixTrie.build(words("ab b a"))
        self.assertEqual(len(trie), 4)
        self.assertEqual(trie.parent, (-1, 0, 0, 1))
        self.assertEqual([trie.word(u) for u in range(4)], [(), (0,), (1,), (0, 1)])
        self.assertEqual(trie.terminal_nodes(), [1, 2, 3])

    def test_counts_prefixes(self):
        # eps, a, ab, abb, b, ba
        sample = Sample.from_words(AB, words("abb ba ab"))
        self.assertEqual(len(sample.prefix_index), 6)


class TestSample(unittest.TestCase):
    def test_deduplicates_and_sorts(self):
        sample = Sample.from_words(AB, words("ab a ab eps"))
        self.assertEqual(len(sample), 3)
        self.assertEqual(sample.sorted_words(), [(), (0,), (0, 1)])
        self.assertEqual(sample.max_length(), 2)
        self.assertEqual(sample.count_up_to(1), 2)

    def test_rejects_out_of_range_symbols(self):
        with self.assertRaises(InvalidWordError):
            Sample.from_words(AB, [(0, 2)])

    def test_recognizes(self):
        ends_a = Dfa(AB, ((1, 0), (1, 0)), frozenset({1}))
        self.assertTrue(recognizes_sample(ends_a, Sample.from_words(AB, words("a ba bba"))))
        self.assertFalse(recognizes_sample(ends_a, Sample.from_words(AB, words("a ab"))))
        self.assertTrue(recognizes_sample(ends_a, Sample.from_words(AB, [])))
        self.assertEqual(reached_states(ends_a.delta, 0, Sample.from_words(AB, words("a b"))), frozenset({0, 1}))

    def test_alphabet_mismatch(self):
        with self.assertRaises(AlphabetMismatchError):
            recognizes_sample(trivial_dfa(Alphabet.of_size(3)), Sample.from_words(AB, words("a")))


if __name__ == "__main__":
    unittest.main()
