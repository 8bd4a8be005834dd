from __future__ import annotations

import queue
import threading
import time
from collections.abc import Callable, Sequence
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .automata import Alphabet, Dfa, Word
from .counting import completion_counts
from .defaults import (
    DEFAULT_INIT_RAND,
    DEFAULT_NB_RUN,
    EXPERIMENT_ALPHABET_SIZE,
    EXPERIMENT_DFA_REDRAWS,
    EXPERIMENT_FINAL_PROBABILITY,
    EXPERIMENT_MAX_LENGTH,
    EXPERIMENT_MAX_STATES,
    EXPERIMENT_MIN_LENGTH,
    EXPERIMENT_WORDS,
    ORACLE_GUARD,
)
from .errors import (
    GuardExceededError,
    InvalidConfigError,
    MinCountError,
    SolverUnavailableError,
    TimeLimitExceeded,
    UndefinedCorrelationError,
)
from .heuristic import HeuristicConfig, make_rng, min_score_learn
from .ilp_solvers import ExternalSolver, binary_search_min, solve_min
from .limits import Deadline
from .oracle import enumerate_min_count
from .sample import Sample
from .store import append_rows, initialize_results

ALGORITHMS = ("heuristic", "ilp", "ilp-binary-search", "oracle")
STATUSES = ("ok", "timeout", "unavailable", "too_large", "error")


@dataclass(frozen=True)
class BenchRecord:
    instance: str
    algo: str
    n: int
    seed: int
    start_score: int | None
    final_score: int | None
    ms: float
    status: str

    def to_row(self) -> dict[str, str]:
        return {
            "instance": self.instance,
            "algo": self.algo,
            "n": str(self.n),
            "seed": str(self.seed),
            "start_score": "" if self.start_score is None else str(self.start_score),
            "final_score": "" if self.final_score is None else str(self.final_score),
            "ms": f"{self.ms:.3f}",
            "status": self.status,
        }

    @classmethod
    def from_row(cls, row: dict[str, str]) -> "BenchRecord":
        def optional(value: str | None) -> int | None:
            return None if value in (None, "") else int(value)

        return cls(
            instance=row["instance"],
            algo=row["algo"],
            n=int(row["n"]),
            seed=int(row["seed"]),
            start_score=optional(row.get("start_score")),
            final_score=optional(row.get("final_score")),
            ms=float(row["ms"]),
            status=row["status"],
        )


# --- experiment samples ---


def random_dfa(
    rng: np.random.Generator,
    *,
    max_states: int = EXPERIMENT_MAX_STATES,
    sigma: int = EXPERIMENT_ALPHABET_SIZE,
    final_probability: float = EXPERIMENT_FINAL_PROBABILITY,
) -> Dfa:
    """Uniform size in 1..max_states, uniform transitions, at least one final state."""
    n = int(rng.integers(1, max_states + 1))
    delta = tuple(tuple(int(t) for t in row) for row in rng.integers(0, n, size=(n, sigma)))
    while True:
        flags = rng.random(n) < final_probability
        if flags.any():
            break
    final = frozenset(int(q) for q in np.flatnonzero(flags))
    return Dfa(Alphabet.of_size(sigma), delta, final, 0)


def sample_accepted_word(dfa: Dfa, length: int, completion: list[list[int]], rng: np.random.Generator) -> Word:
    """A uniformly random accepted word of the given length (needs completion[length][init] > 0)."""
    if completion[length][dfa.init] == 0:
        raise ValueError(f"no accepted word of length {length}")
    q = dfa.init
    word: list[int] = []
    for pos in range(length):
        remaining = length - pos - 1
        weights = [completion[remaining][dfa.delta[q][a]] for a in range(dfa.sigma)]
        pick = int(rng.integers(0, sum(weights)))
        for a, weight in enumerate(weights):
            if pick < weight:
                word.append(a)
                q = dfa.delta[q][a]
                break
            pick -= weight
    return tuple(word)


def generate_experiment_instance(
    seed: int,
    *,
    words: int = EXPERIMENT_WORDS,
    min_length: int = EXPERIMENT_MIN_LENGTH,
    max_length: int = EXPERIMENT_MAX_LENGTH,
    max_states: int = EXPERIMENT_MAX_STATES,
    sigma: int = EXPERIMENT_ALPHABET_SIZE,
    final_probability: float = EXPERIMENT_FINAL_PROBABILITY,
    redraws: int = EXPERIMENT_DFA_REDRAWS,
) -> tuple[Sample, Dfa]:
    """(sample, hidden DFA it was drawn from)."""
    if not 0 <= min_length <= max_length:
        raise InvalidConfigError("need 0 <= min_length <= max_length")
    rng = make_rng(seed)
    for _ in range(redraws):
        hidden = random_dfa(rng, max_states=max_states, sigma=sigma, final_probability=final_probability)
        completion = completion_counts(hidden, max_length)
        if not any(completion[length][hidden.init] for length in range(min_length, max_length + 1)):
            continue
        drawn: list[Word] = []
        for _ in range(words):
            length = int(rng.integers(min_length, max_length + 1))
            while completion[length][hidden.init] == 0:
                length = int(rng.integers(min_length, max_length + 1))
            drawn.append(sample_accepted_word(hidden, length, completion, rng))
        return Sample.from_words(hidden.alphabet, drawn), hidden
    raise MinCountError(f"no random DFA accepted a word of length {min_length}..{max_length} in {redraws} draws")


def generate_experiment_sample(seed: int, **kwargs) -> Sample:
    return generate_experiment_instance(seed, **kwargs)[0]


# --- statistics ---


def pearson(xs: Sequence[float], ys: Sequence[float]) -> float:
    if len(xs) != len(ys) or len(xs) < 2:
        raise InvalidConfigError("pearson needs two vectors of equal length >= 2")
    x = np.asarray(xs, dtype=float)
    y = np.asarray(ys, dtype=float)
    if np.ptp(x) == 0 or np.ptp(y) == 0:
        raise UndefinedCorrelationError("correlation is undefined for a constant vector")
    return float(np.clip(np.corrcoef(x, y)[0, 1], -1.0, 1.0))


# --- runner ---


def _run_algorithm(
    algo: str,
    sample: Sample,
    n: int,
    seed: int,
    deadline: Deadline,
    *,
    solver_command: str | None,
    init_rand: int,
    nb_run: int,
    oracle_guard: int,
) -> tuple[int | None, int]:
    """(start score, final score)"""
    if algo == "heuristic":
        cfg = HeuristicConfig(n=n, init_rand=init_rand, nb_run=nb_run, seed=seed)
        result = min_score_learn(sample, n, cfg, deadline)
        return result.initial_score, result.score
    if algo == "oracle":
        return None, enumerate_min_count(sample, n, guard=oracle_guard, deadline=deadline).min_count
    if not solver_command:
        raise SolverUnavailableError("no ILP solver configured")
    solver = ExternalSolver(solver_command)
    if algo == "ilp":
        return None, solve_min(sample, n, solver, deadline)[1]
    return None, binary_search_min(sample, n, solver, deadline)[1]


def run_bench(
    sample: Sample,
    n: int,
    algorithms: Sequence[str],
    *,
    timeout_ms: int | None = None,
    seed: int = 0,
    repeats: int = 1,
    jobs: int = 1,
    results_path: Path | None = None,
    instance: str = "sample",
    solver_command: str | None = None,
    init_rand: int = DEFAULT_INIT_RAND,
    nb_run: int = DEFAULT_NB_RUN,
    oracle_guard: int = ORACLE_GUARD,
    stop_event: threading.Event | None = None,
    progress_callback: Callable[[dict], None] | None = None,
    log: Callable[[str], None] | None = print,
) -> list[BenchRecord]:
    unknown = [a for a in algorithms if a not in ALGORITHMS]
    if unknown:
        raise InvalidConfigError(f"unknown algorithm(s): {', '.join(unknown)} (choose from {', '.join(ALGORITHMS)})")
    if repeats < 1:
        raise InvalidConfigError("repeats must be >= 1")
    if results_path is not None:
        initialize_results(results_path, log)

    work = [(algo, seed + i) for algo in algorithms for i in range(repeats)]
    records: list[BenchRecord | None] = [None] * len(work)
    completed = {"count": 0, "written": 0}
    counter_lock = threading.Lock()
    failures: list[BaseException] = []
    abort = threading.Event()

    def flush_rows(final: bool = False) -> None:
        """Append finished records to the CSV in job order. Caller holds counter_lock."""
        if results_path is None:
            return
        rows = []
        while completed["written"] < len(work) and records[completed["written"]] is not None:
            rows.append(records[completed["written"]].to_row())
            completed["written"] += 1
        if final:
            rows.extend(r.to_row() for r in records[completed["written"]:] if r is not None)
            completed["written"] = len(work)
        append_rows(results_path, rows)

    def run_job(index: int) -> None:
        algo, job_seed = work[index]
        start = time.perf_counter()
        start_score: int | None = None
        final_score: int | None = None
        try:
            start_score, final_score = _run_algorithm(
                algo, sample, n, job_seed, Deadline(timeout_ms),
                solver_command=solver_command, init_rand=init_rand, nb_run=nb_run, oracle_guard=oracle_guard,
            )
            status = "ok"
        except TimeLimitExceeded:
            status = "timeout"
        except SolverUnavailableError:
            status = "unavailable"
        except GuardExceededError:
            status = "too_large"
        except MinCountError as exc:
            status = "error"
            if log:
                log(f"  ERROR ({algo}, seed {job_seed}): {exc}")
        ms = round((time.perf_counter() - start) * 1000.0, 3)
        record = BenchRecord(instance, algo, n, job_seed, start_score, final_score if status == "ok" else None, ms, status)
        with counter_lock:
            records[index] = record
            flush_rows()
            completed["count"] += 1
            done = completed["count"]
        msg = f"[{done}/{len(work)}] {algo} seed={job_seed}: {status} score={record.final_score} ({ms:.0f} ms)"
        if log:
            log(msg)
        if progress_callback:
            progress_callback({"type": "record", "record": record.to_row(), "completed": done, "total": len(work)})
            progress_callback({"type": "progress", "completed": done, "total": len(work), "message": msg})

    if jobs > 1 and len(work) > 1:
        work_queue: queue.Queue[int | None] = queue.Queue()

        def worker() -> None:
            while True:
                index = work_queue.get()
                if index is None:
                    work_queue.task_done()
                    break
                try:
                    if not (abort.is_set() or (stop_event and stop_event.is_set())):
                        run_job(index)
                except Exception as exc:
                    abort.set()
                    with counter_lock:
                        failures.append(exc)
                    if log:
                        log(f"\nERROR: Worker crashed: {exc}")
                finally:
                    work_queue.task_done()

        threads = [threading.Thread(target=worker, daemon=True) for _ in range(min(jobs, len(work)))]
        for t in threads:
            t.start()
        for index in range(len(work)):
            work_queue.put(index)
        for _ in threads:
            work_queue.put(None)
        work_queue.join()
        for t in threads:
            t.join(timeout=0.5)
        with counter_lock:
            flush_rows(final=True)
        if failures:
            raise failures[0]
    else:
        for index in range(len(work)):
            if stop_event and stop_event.is_set():
                break
            run_job(index)

    return [r for r in records if r is not None]
