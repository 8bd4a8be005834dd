import tempfile
import threading
import time
import unittest
from collections import Counter
from pathlib import Path
from unittest import mock

from support import AB, words

from mincount_dfa.automata import Dfa, accepts, trivial_dfa
from mincount_dfa.bench import (
    BenchRecord,
    generate_experiment_instance,
    generate_experiment_sample,
    pearson,
    random_dfa,
    run_bench,
    sample_accepted_word,
)
from mincount_dfa.counting import completion_counts
from mincount_dfa.errors import InvalidConfigError, UndefinedCorrelationError
from mincount_dfa.heuristic import make_rng
from mincount_dfa.oracle import enumerate_min_count
from mincount_dfa.sample import Sample
from mincount_dfa.store import load_rows


class TestRecords(unittest.TestCase):
    def test_row_round_trip(self):
        record = BenchRecord("p", "heuristic", 3, 7, 12, 9, 1.2346, "ok")
        row = record.to_row()
        self.assertEqual(row["ms"], "1.235")
        self.assertEqual(BenchRecord.from_row(row).final_score, 9)
        missing = BenchRecord("p", "ilp", 3, 0, None, None, 2.0, "unavailable").to_row()
        self.assertEqual((missing["start_score"], missing["final_score"]), ("", ""))
        self.assertIsNone(BenchRecord.from_row(missing).start_score)


class TestPearson(unittest.TestCase):
    def test_values(self):
        self.assertAlmostEqual(pearson([1, 2, 3], [3, 5, 7]), 1.0)
        self.assertAlmostEqual(pearson([1, 2, 3], [3, 2, 1]), -1.0)
        self.assertAlmostEqual(pearson([1, 2, 3], [1, 3, 2]), 0.5)

    def test_undefined(self):
        with self.assertRaises(UndefinedCorrelationError):
            pearson([1, 1, 1], [1, 2, 3])
        with self.assertRaises(InvalidConfigError):
            pearson([1], [1])
        with self.assertRaises(InvalidConfigError):
            pearson([1, 2], [1, 2, 3])


class TestExperimentSamples(unittest.TestCase):
    def test_deterministic_and_drawn_from_hidden_dfa(self):
        sample, hidden = generate_experiment_instance(3, words=200)
        again, _ = generate_experiment_instance(3, words=200)
        self.assertEqual(sample.words, again.words)
        self.assertEqual(sample.alphabet.size, 3)
        self.assertLessEqual(hidden.n_states, 10)
        self.assertLessEqual(len(sample), 200)
        for word in sample.words:
            self.assertTrue(1 <= len(word) <= 10)
            self.assertTrue(accepts(hidden, word))
        self.assertEqual(generate_experiment_sample(3, words=200).words, sample.words)

    def test_bad_lengths(self):
        with self.assertRaises(InvalidConfigError):
            generate_experiment_instance(0, min_length=5, max_length=2)

    def test_random_dfa_has_a_final_state(self):
        rng = make_rng(11)
        for _ in range(50):
            dfa = random_dfa(rng, max_states=4, sigma=2)
            self.assertTrue(dfa.final)
            self.assertTrue(1 <= dfa.n_states <= 4)

    def test_accepted_words_are_uniform(self):
        rng = make_rng(0)
        dfa = trivial_dfa(AB)
        completion = completion_counts(dfa, 2)
        counts = Counter(sample_accepted_word(dfa, 2, completion, rng) for _ in range(4000))
        self.assertEqual(set(counts), set(words("aa ab ba bb")))
        for value in counts.values():
            # 1000 expected, standard deviation about 27
            self.assertLess(abs(value - 1000), 150)

    def test_never_draws_rejected_words(self):
        ends_a = Dfa(AB, ((1, 0), (1, 0)), frozenset({1}))
        completion = completion_counts(ends_a, 4)
        rng = make_rng(1)
        for _ in range(100):
            self.assertEqual(sample_accepted_word(ends_a, 4, completion, rng)[-1], 0)
        with self.assertRaises(ValueError):
            sample_accepted_word(ends_a, 0, completion, rng)


class TestRunBench(unittest.TestCase):
    def setUp(self):
        self.sample = Sample.from_words(AB, words("a ab abb"))

    def test_records_and_csv(self):
        events = []
        with tempfile.TemporaryDirectory() as tmp:
            results = Path(tmp) / "bench_results.csv"
            records = run_bench(
                self.sample, 3, ["oracle", "heuristic", "ilp"],
                seed=5, repeats=2, results_path=results, init_rand=3, nb_run=2,
                progress_callback=events.append, log=None,
            )
            rows = load_rows(results)
        self.assertEqual([(r.algo, r.seed) for r in records],
                         [("oracle", 5), ("oracle", 6), ("heuristic", 5), ("heuristic", 6), ("ilp", 5), ("ilp", 6)])
        optimum = enumerate_min_count(self.sample, 3).min_count
        for record in records:
            if record.algo == "oracle":
                self.assertEqual((record.status, record.final_score), ("ok", optimum))
            elif record.algo == "heuristic":
                self.assertEqual(record.status, "ok")
                self.assertGreaterEqual(record.final_score, optimum)
                self.assertLessEqual(record.final_score, record.start_score)
            else:
                self.assertEqual((record.status, record.final_score), ("unavailable", None))
        on_disk = [BenchRecord.from_row(r) for r in rows]
        self.assertEqual([(r.algo, r.seed, r.status, r.final_score) for r in on_disk],
                         [(r.algo, r.seed, r.status, r.final_score) for r in records])
        self.assertEqual(sum(1 for e in events if e["type"] == "record"), 6)
        self.assertEqual(events[-1]["completed"], 6)

    def test_parallel_jobs_keep_job_order(self):
        records = run_bench(self.sample, 2, ["heuristic"], repeats=4, jobs=3, init_rand=2, nb_run=1, log=None)
        self.assertEqual([r.seed for r in records], [0, 1, 2, 3])
        self.assertTrue(all(r.status == "ok" for r in records))

    def test_parallel_csv_rows_follow_job_order(self):
        def slow_for_low_seeds(algo, sample, n, seed, deadline, **kwargs):
            time.sleep(0.05 * (3 - seed))
            return None, seed

        with tempfile.TemporaryDirectory() as tmp:
            results = Path(tmp) / "bench_results.csv"
            with mock.patch("mincount_dfa.bench._run_algorithm", side_effect=slow_for_low_seeds):
                records = run_bench(self.sample, 2, ["oracle"], repeats=4, jobs=3, results_path=results, log=None)
            rows = load_rows(results)
        self.assertEqual([r.final_score for r in records], [0, 1, 2, 3])
        self.assertEqual([r["seed"] for r in rows], ["0", "1", "2", "3"])

    def test_unexpected_failures_propagate_for_any_job_count(self):
        for jobs in (1, 2):
            with self.subTest(jobs=jobs):
                with mock.patch("mincount_dfa.bench._run_algorithm", side_effect=RuntimeError("boom")):
                    with self.assertRaisesRegex(RuntimeError, "boom"):
                        run_bench(self.sample, 2, ["oracle"], repeats=3, jobs=jobs, log=None)

    def test_heuristic_is_reproducible(self):
        first = run_bench(self.sample, 3, ["heuristic"], seed=9, init_rand=3, nb_run=2, log=None)
        second = run_bench(self.sample, 3, ["heuristic"], seed=9, init_rand=3, nb_run=2, log=None)
        self.assertEqual(first[0].final_score, second[0].final_score)
        self.assertEqual(first[0].start_score, second[0].start_score)

    def test_statuses(self):
        records = run_bench(self.sample, 3, ["heuristic", "oracle"], timeout_ms=0, log=None)
        self.assertEqual([r.status for r in records], ["timeout", "timeout"])
        records = run_bench(self.sample, 3, ["oracle"], oracle_guard=10, log=None)
        self.assertEqual(records[0].status, "too_large")

    def test_stop_event(self):
        stop = threading.Event()
        stop.set()
        self.assertEqual(run_bench(self.sample, 2, ["oracle"], stop_event=stop, log=None), [])

    def test_rejects_bad_arguments(self):
        with self.assertRaises(InvalidConfigError):
            run_bench(self.sample, 2, ["magic"], log=None)
        with self.assertRaises(InvalidConfigError):
            run_bench(self.sample, 2, ["oracle"], repeats=0, log=None)


if __name__ == "__main__":
    unittest.main()
