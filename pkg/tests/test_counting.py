import unittest

from hypothesis import given, settings

from support import AB, brute_count, dfas

from mincount_dfa.automata import Dfa, trivial_dfa
from mincount_dfa.compare import distinguishing_witness
from mincount_dfa.counting import (
    completion_counts,
    count_accepted_up_to,
    count_vectors,
    live_states,
    max_count,
    words_up_to,
)
from mincount_dfa.errors import UnsupportedAlphabetError
from mincount_dfa.families import UNARY, chain_dfa, horizon_pair, ring_dfa


class TestCounting(unittest.TestCase):
    @settings(deadline=None, max_examples=80)
    @given(dfas())
    def test_matches_brute_force(self, dfa):
        for m in range(5):
            self.assertEqual(count_accepted_up_to(dfa, m), brute_count(dfa, m))

    @settings(deadline=None, max_examples=40)
    @given(dfas())
    def test_count_vectors_distribute_all_words(self, dfa):
        for length, vector in enumerate(count_vectors(dfa, 4)):
            self.assertEqual(sum(vector), dfa.sigma**length)

    def test_trivial_dfa_counts_every_word(self):
        self.assertEqual(count_accepted_up_to(trivial_dfa(AB), 2), 7)
        self.assertEqual(max_count(2, 2), 7)
        self.assertEqual(max_count(1, 2), 1)
        self.assertEqual(max_count(3, 3), (3**5 - 1) // 2)
        self.assertEqual(words_up_to(1, 4), 5)

    def test_max_count_needs_two_symbols(self):
        with self.assertRaises(UnsupportedAlphabetError):
            max_count(2, 1)

    def test_dead_initial_state(self):
        dfa = Dfa(AB, ((1, 1), (1, 1)), frozenset({0}))
        self.assertEqual(live_states(dfa), frozenset({0}))
        self.assertEqual(count_accepted_up_to(dfa, 10), 1)

    def test_large_counts_are_exact(self):
        # 200 + 1 lengths of 2^k words each
        self.assertEqual(count_accepted_up_to(trivial_dfa(AB), 200), 2**201 - 1)

    def test_completion_counts(self):
        dfa = Dfa(AB, ((1, 0), (1, 0)), frozenset({1}))  # ends in 'a'
        table = completion_counts(dfa, 3)
        self.assertEqual(table[0], [0, 1])
        self.assertEqual(table[1], [1, 1])
        self.assertEqual(table[3], [4, 4])


class TestHorizonFamilies(unittest.TestCase):
    def test_pair_agrees_below_horizon_and_differs_on_it(self):
        for n in range(2, 7):
            ring, chain = horizon_pair(n)
            self.assertEqual(ring.n_states, n)
            self.assertEqual(count_accepted_up_to(ring, 2 * n - 3), count_accepted_up_to(chain, 2 * n - 3))
            self.assertEqual(count_accepted_up_to(ring, 2 * n - 2), count_accepted_up_to(chain, 2 * n - 2) + 1)
            self.assertEqual(distinguishing_witness(ring, chain), (0,) * (2 * n - 2))

    def test_chain_and_ring_first_differ_at_m_plus_n_minus_2(self):
        for n in range(2, 6):
            for m in range(2, n + 1):
                word = distinguishing_witness(chain_dfa(m), ring_dfa(n, m - 2))
                self.assertEqual(len(word), m + n - 2)

    def test_unary_alphabet(self):
        self.assertEqual(UNARY.size, 1)
        self.assertEqual(count_accepted_up_to(ring_dfa(3, 0), 6), 3)


if __name__ == "__main__":
    unittest.main()
