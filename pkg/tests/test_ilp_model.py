import itertools
import unittest
from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from support import AB, all_words, brute_count, dfas, words

from mincount_dfa.automata import Alphabet, Dfa, accepts, trivial_dfa
from mincount_dfa.counting import count_accepted_up_to
from mincount_dfa.errors import InvalidAssignmentError, InvalidConfigError, SolverProtocolError
from mincount_dfa.ilp_model import (
    BINARY,
    XF,
    IlpSolution,
    assignment_from_dfa,
    build_model,
    check_assignment,
    decode_solution,
    feasibility_model,
    t_var,
)
from mincount_dfa.oracle import enumerate_min_count
from mincount_dfa.sample import Sample, recognizes_sample


def _census(n, sigma, trie_nodes):
    m = 2 * n - 2
    return n * sigma * n + n + trie_nodes * n + 2 * n * (m + 1) + n * sigma * n * m + 1


def _constraint_census(n, sigma, trie_nodes, terminals):
    m = 2 * n - 2
    return (
        n * sigma + 1 + trie_nodes + (trie_nodes - 1) * n * n + terminals * n
        + n + 2 * m * n * n * sigma + m * n + 2 * n * (m + 1) + 1
    )


class TestModelShape(unittest.TestCase):
    def test_single_word_two_states(self):
        model = build_model(Sample.from_words(AB, words("a")), 2)
        self.assertEqual(len(model.variables), 43)
        self.assertEqual(len(model.constraints), 64)
        self.assertEqual(model.objective, ((1, XF),))
        self.assertEqual(len(set(model.constraint_names())), 64)
        self.assertEqual(sum(1 for v in model.variables if v.kind == BINARY), 8 + 2 + 4)

    def test_variable_census(self):
        cases = (
            (1, Sample.from_words(AB, words("a"))),
            (3, Sample.from_words(AB, words("a ab abb"))),
            (2, Sample.from_words(Alphabet.of_size(3), [(0,), (1, 2)])),
        )
        for n, sample in cases:
            model = build_model(sample, n)
            self.assertEqual(len(model.variables), _census(n, sample.alphabet.size, len(sample.prefix_index)))

    def test_census_grid(self):
        word_sets = {
            1: ([()], [(0,)], [(0,), (0, 0)]),
            2: ([()], [(0,)], [(0,), (1,)]),
        }
        for n in (1, 2, 3):
            for sigma, samples in word_sets.items():
                for chosen in samples:
                    sample = Sample.from_words(Alphabet.of_size(sigma), chosen)
                    trie = sample.prefix_index
                    with self.subTest(n=n, sigma=sigma, prefixes=len(trie)):
                        model = build_model(sample, n)
                        self.assertEqual(len(model.variables), _census(n, sigma, len(trie)))
                        self.assertEqual(
                            len(model.constraints),
                            _constraint_census(n, sigma, len(trie), len(trie.terminal_nodes())),
                        )
                        self.assertEqual(len(feasibility_model(sample, n, 0).constraints), len(model.constraints) + 1)
        self.assertEqual(_constraint_census(2, 2, 2, 1), 64)

    def test_bounds(self):
        model = build_model(Sample.from_words(AB, words("a")), 2)
        variables = model.variable_map()
        self.assertEqual(variables["c_0_2"].upper, 4)
        self.assertEqual(variables["cp_0_1_1_1"].upper, 2)
        self.assertEqual(variables[XF].upper, 7)

    def test_feasibility_variant(self):
        model = feasibility_model(Sample.from_words(AB, words("a")), 2, 3)
        self.assertEqual(model.objective, ())
        self.assertEqual(model.constraints[-1].name, "bound_xF")
        self.assertEqual(model.constraints[-1].rhs, 3)

    def test_rejects_zero_states(self):
        with self.assertRaises(InvalidConfigError):
            build_model(Sample.from_words(AB, []), 0)


class TestAssignments(unittest.TestCase):
    @settings(deadline=None, max_examples=40)
    @given(st.data())
    def test_dfa_assignment_is_feasible(self, data):
        dfa = data.draw(dfas(max_states=3, sigma=2))
        n = data.draw(st.integers(dfa.n_states, 3))
        accepted = [w for w in all_words(2, 3) if accepts(dfa, w)]
        chosen = data.draw(st.lists(st.sampled_from(accepted), max_size=3)) if accepted else []
        sample = Sample.from_words(AB, chosen)
        model = build_model(sample, n)
        values = assignment_from_dfa(dfa, sample, n)
        self.assertIsNone(check_assignment(model, values))
        self.assertEqual(values[XF], count_accepted_up_to(dfa, 2 * n - 2))

    def test_trivial_dfa_reaches_the_ceiling(self):
        sample = Sample.from_words(AB, words("a"))
        values = assignment_from_dfa(trivial_dfa(AB), sample, 1)
        self.assertEqual(values[XF], 1)
        values = assignment_from_dfa(trivial_dfa(AB), sample, 3)
        self.assertEqual(values[XF], 31)

    def test_dfa_must_accept_the_sample(self):
        sample = Sample.from_words(AB, words("b"))
        ends_a = Dfa(AB, ((1, 0), (1, 0)), frozenset({1}))
        model = build_model(sample, 2)
        violated = check_assignment(model, assignment_from_dfa(ends_a, sample, 2))
        self.assertTrue(violated.startswith("consistent_"))

    def test_check_reports_the_kind_of_violation(self):
        sample = Sample.from_words(AB, words("a"))
        model = build_model(sample, 2)
        good = assignment_from_dfa(enumerate_min_count(sample, 2).witness, sample, 2)
        self.assertEqual(check_assignment(model, {**good, "zz": 1}), "unknown:zz")
        self.assertEqual(check_assignment(model, {**good, "f_0": Fraction(1, 2)}), "integrality:f_0")
        self.assertEqual(check_assignment(model, {**good, "f_0": 2}), "bound:f_0")
        self.assertEqual(check_assignment(model, {**good, t_var(0, 0, 0): 1}), "dfa_0_0")

    def test_every_table_and_final_set_of_two_states(self):
        sample = Sample.from_words(AB, words("a"))
        model = build_model(sample, 2)
        cells = [(s, a, q) for s in range(2) for a in range(2) for q in range(2)]
        template = assignment_from_dfa(trivial_dfa(AB), sample, 2)
        feasible_counts = []
        for t_bits in itertools.product((0, 1), repeat=len(cells)):
            bits = dict(zip(cells, t_bits))
            one_hot = all(bits[(s, a, 0)] + bits[(s, a, 1)] == 1 for s in range(2) for a in range(2))
            if not one_hot:
                values = {**template, **{t_var(*cell): bit for cell, bit in bits.items()}}
                self.assertTrue(check_assignment(model, values).startswith("dfa_"), t_bits)
                continue
            delta = tuple(tuple(0 if bits[(s, a, 0)] else 1 for a in range(2)) for s in range(2))
            for f_bits in itertools.product((0, 1), repeat=2):
                dfa = Dfa(AB, delta, frozenset(q for q in range(2) if f_bits[q]), 0)
                values = assignment_from_dfa(dfa, sample, 2)
                violated = check_assignment(model, values)
                with self.subTest(delta=delta, final=f_bits):
                    self.assertEqual(violated is None, recognizes_sample(dfa, sample))
                    if violated is None:
                        self.assertEqual(values[XF], brute_count(dfa, 2))
                        feasible_counts.append(values[XF])
                    else:
                        self.assertTrue(violated.startswith("consistent_"))
        self.assertEqual(min(feasible_counts), enumerate_min_count(sample, 2).min_count)


class TestDecode(unittest.TestCase):
    def setUp(self):
        self.sample = Sample.from_words(AB, words("a"))
        self.model = build_model(self.sample, 2)
        self.optimal = assignment_from_dfa(enumerate_min_count(self.sample, 2).witness, self.sample, 2)

    def test_decodes_optimum(self):
        dfa = decode_solution(self.model, IlpSolution("optimal", self.optimal))
        self.assertEqual(dfa.delta, ((1, 0), (0, 0)))
        self.assertEqual(dfa.final, frozenset({1}))

    def test_missing_values_default_to_zero(self):
        sparse = {k: v for k, v in self.optimal.items() if v != 0}
        self.assertEqual(decode_solution(self.model, IlpSolution("optimal", sparse)).final, frozenset({1}))

    def test_overstated_count_is_only_fine_when_not_optimal(self):
        values = dict(self.optimal)
        values["cf_1_2"] += 1
        values[XF] += 1
        # the count constraints are lower bounds only
        self.assertIsNone(check_assignment(self.model, values))
        decode_solution(self.model, IlpSolution("feasible", values))
        with self.assertRaises(InvalidAssignmentError):
            decode_solution(self.model, IlpSolution("optimal", values))

    def test_rejects_bad_solutions(self):
        with self.assertRaises(SolverProtocolError):
            decode_solution(self.model, IlpSolution("infeasible", {}))
        broken = {**self.optimal, t_var(0, 0, 0): 1}
        with self.assertRaises(InvalidAssignmentError) as ctx:
            decode_solution(self.model, IlpSolution("optimal", broken))
        self.assertEqual(ctx.exception.constraint, "dfa_0_0")
        fractional = {**self.optimal, "w_1_1": Fraction(1, 2)}
        with self.assertRaises(InvalidAssignmentError):
            decode_solution(self.model, IlpSolution("optimal", fractional))


if __name__ == "__main__":
    unittest.main()
