import unittest

from support import AB, brute_count, words

from mincount_dfa.automata import Alphabet, trivial_dfa
from mincount_dfa.compare import LanguageRelation, language_relation
from mincount_dfa.counting import count_accepted_up_to
from mincount_dfa.errors import GuardExceededError, TimeLimitExceeded
from mincount_dfa.families import UNARY, chain_dfa, ring_dfa
from mincount_dfa.heuristic import make_rng
from mincount_dfa.limits import Deadline
from mincount_dfa.oracle import (
    certify_language_minimal,
    decide_count_bound,
    enumerate_min_count,
    enumeration_size,
)
from mincount_dfa.sample import Sample, recognizes_sample


class TestEnumerateMinCount(unittest.TestCase):
    def test_one_state(self):
        result = enumerate_min_count(Sample.from_words(AB, words("a")), 1)
        self.assertEqual(result.min_count, 1)
        self.assertEqual(result.enumerated, 2)

    def test_two_states_single_word(self):
        p = Sample.from_words(AB, words("a"))
        result = enumerate_min_count(p, 2)
        self.assertEqual(result.min_count, 2)
        # first minimiser in row-major order
        self.assertEqual(result.witness.delta, ((1, 0), (0, 0)))
        self.assertEqual(result.witness.final, frozenset({1}))
        self.assertEqual(brute_count(result.witness, 2), 2)

    def test_witness_accepts_sample(self):
        p = Sample.from_words(AB, words("a ab abb"))
        result = enumerate_min_count(p, 3)
        self.assertTrue(recognizes_sample(result.witness, p))
        self.assertEqual(brute_count(result.witness, 4), result.min_count)
        self.assertEqual(result.enumerated, enumeration_size(3, 2))

    def test_empty_sample(self):
        self.assertEqual(enumerate_min_count(Sample.from_words(AB, []), 2).min_count, 0)

    def test_custom_horizon(self):
        result = enumerate_min_count(Sample.from_words(AB, words("a")), 2, horizon=1)
        self.assertEqual(result.min_count, 1)

    def test_guard(self):
        with self.assertRaises(GuardExceededError):
            enumerate_min_count(Sample.from_words(AB, words("a")), 3, guard=100)
        with self.assertRaises(TimeLimitExceeded):
            enumerate_min_count(Sample.from_words(AB, words("a")), 2, deadline=Deadline(0))

    def test_unary_sample(self):
        unary = Alphabet(("a",))
        p = Sample.from_words(unary, [(0, 0)])
        # ring of two states accepting even lengths: eps, aa
        self.assertEqual(enumerate_min_count(p, 2).min_count, 2)
        self.assertEqual(brute_count(ring_dfa(2, 0), 2), 2)


class TestDecisions(unittest.TestCase):
    def test_decide(self):
        p = Sample.from_words(AB, words("a"))
        self.assertFalse(decide_count_bound(p, 2, 1))
        self.assertTrue(decide_count_bound(p, 2, 2))

    def test_certify(self):
        p = Sample.from_words(AB, words("a"))
        witness = enumerate_min_count(p, 2).witness
        self.assertTrue(certify_language_minimal(witness, p, 2))
        self.assertFalse(certify_language_minimal(trivial_dfa(AB), p, 2))
        self.assertTrue(certify_language_minimal(trivial_dfa(AB), p, 1))

    def test_minimum_count_witnesses_are_language_minimal(self):
        for i in range(50):
            rng = make_rng(200 + i)
            n = (1, 2, 2, 2, 3)[i % 5]
            chosen = [
                tuple(int(a) for a in rng.integers(0, 2, size=int(rng.integers(0, 4))))
                for _ in range(int(rng.integers(0, 5)))
            ]
            p = Sample.from_words(AB, chosen)
            with self.subTest(n=n, words=chosen):
                witness = enumerate_min_count(p, n).witness
                self.assertTrue(recognizes_sample(witness, p))
                self.assertTrue(certify_language_minimal(witness, p, n))

    def test_shorter_horizon_misses_a_smaller_language(self):
        for n in (2, 3):
            p = Sample.from_words(UNARY, [(0,) * (n - 2)])
            ring, chain = ring_dfa(n, n - 2), chain_dfa(n)
            with self.subTest(n=n):
                self.assertEqual(count_accepted_up_to(ring, 2 * n - 3), 1)
                self.assertEqual(enumerate_min_count(p, n, horizon=2 * n - 3).min_count, 1)
                # only the full horizon tells the ring from the chain
                self.assertEqual(count_accepted_up_to(chain, 2 * n - 3), 1)
                self.assertEqual((count_accepted_up_to(ring, 2 * n - 2), count_accepted_up_to(chain, 2 * n - 2)), (2, 1))
                self.assertIs(language_relation(chain, ring), LanguageRelation.A_STRICT_SUBSET_B)
                self.assertFalse(certify_language_minimal(ring, p, n))
                self.assertTrue(certify_language_minimal(chain, p, n))


if __name__ == "__main__":
    unittest.main()
