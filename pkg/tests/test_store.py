import tempfile
import unittest
from pathlib import Path

from mincount_dfa.store import (
    RESULTS_HEADER,
    append_rows,
    initialize_results,
    load_json,
    load_rows,
    save_json,
)


class TestResultsStore(unittest.TestCase):
    def test_creates_header_and_appends(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp) / "out" / "bench_results.csv"
            initialize_results(path, log=None)
            self.assertEqual(path.read_text(encoding="utf-8"), ",".join(RESULTS_HEADER) + "\n")

            append_rows(path, [{"instance": "p", "algo": "oracle", "n": "2", "seed": "0",
                                "start_score": None, "final_score": "2", "ms": "1.500", "status": "ok"}])
            append_rows(path, [])
            rows = load_rows(path)
            self.assertEqual(len(rows), 1)
            self.assertEqual(rows[0]["start_score"], "")
            self.assertEqual(rows[0]["final_score"], "2")

    def test_existing_results_are_kept(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp) / "bench_results.csv"
            initialize_results(path, log=None)
            append_rows(path, [{"instance": "p", "algo": "heuristic", "n": "3", "seed": "1",
                                "start_score": "9", "final_score": "5", "ms": "2.000", "status": "ok"}])
            initialize_results(path, log=None)
            self.assertEqual(len(load_rows(path)), 1)

    def test_unexpected_header_is_backed_up_and_rebuilt(self):
        with tempfile.TemporaryDirectory() as tmp:
            out = Path(tmp)
            path = out / "bench_results.csv"
            path.write_text("url,status\nhttps://example.com,done\n", encoding="utf-8")
            messages = []
            initialize_results(path, log=messages.append)
            backups = list(out.glob("bench_results.corrupt-*.csv"))
            self.assertTrue(backups, "Expected a bench_results.csv corrupt backup file")
            self.assertIn("url,status", backups[0].read_text(encoding="utf-8"))
            self.assertEqual(load_rows(path), [])
            self.assertTrue(any("unexpected header" in m for m in messages))


class TestJson(unittest.TestCase):
    def test_save_and_load(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp) / "r.json"
            save_json({"ok": 1}, path)
            self.assertEqual(load_json(path, log=None), {"ok": 1})
            self.assertFalse(path.with_name("r.json.tmp").exists())

    def test_corrupt_json_returns_none(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp) / "r.json"
            path.write_text('{"bad_json": [1,2,}', encoding="utf-8")
            messages = []
            self.assertIsNone(load_json(path, log=messages.append))
            self.assertTrue(any("r.json" in m for m in messages))

    def test_undecodable_json_returns_none(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp) / "r.json"
            path.write_bytes(b'{"name": "\xff"}')
            self.assertIsNone(load_json(path, log=None))


if __name__ == "__main__":
    unittest.main()
