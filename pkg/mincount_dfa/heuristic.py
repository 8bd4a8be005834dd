"""
Random-restart hill climbing over transition systems.

A transition system is a DFA without initial or final states. Given a start
state and the sample, the cheapest final set that still accepts the sample is
the set of states the sample words end in, so a transition system is scored
by the fewest words up to length 2n-2 it can be made to accept.
"""

from __future__ import annotations

from collections.abc import Callable
from dataclasses import dataclass

import numpy as np

from .automata import Alphabet, Dfa, ensure_same_alphabet
from .counting import count_accepted_up_to
from .defaults import DEFAULT_INIT_RAND, DEFAULT_NB_RUN, DEFAULT_SEED
from .errors import InvalidConfigError
from .limits import Deadline, ensure_deadline
from .sample import Sample, reached_states

Table = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class TransitionSystem:
    alphabet: Alphabet
    delta: Table

    def __post_init__(self) -> None:
        delta = tuple(tuple(int(t) for t in row) for row in self.delta)
        if not delta:
            raise InvalidConfigError("a transition system needs at least one state")
        for row in delta:
            if len(row) != self.alphabet.size or any(not 0 <= t < len(delta) for t in row):
                raise InvalidConfigError("transition table must be total and in range")
        object.__setattr__(self, "delta", delta)

    @property
    def n_states(self) -> int:
        return len(self.delta)

    def with_move(self, q: int, symbol: int, target: int) -> "TransitionSystem":
        """T[q, symbol -> target]"""
        rows = list(self.delta)
        row = list(rows[q])
        row[symbol] = target
        rows[q] = tuple(row)
        return TransitionSystem(self.alphabet, tuple(rows))


@dataclass(frozen=True)
class HeuristicConfig:
    n: int
    init_rand: int = DEFAULT_INIT_RAND
    nb_run: int = DEFAULT_NB_RUN
    seed: int = DEFAULT_SEED

    def __post_init__(self) -> None:
        if self.n < 1:
            raise InvalidConfigError("state bound n must be >= 1")
        if self.init_rand < 1:
            raise InvalidConfigError("init_rand must be >= 1")
        if self.nb_run < 1:
            raise InvalidConfigError("nb_run must be >= 1")
        if not 0 <= self.seed < 2**64:
            raise InvalidConfigError("seed must be a 64-bit unsigned integer")


@dataclass(frozen=True)
class ScoredDfa:
    dfa: Dfa
    score: int
    start_state: int
    n: int
    initial_score: int | None = None


def make_rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(seed))


def derive_dfa(ts: TransitionSystem, start: int, p: Sample) -> Dfa:
    ensure_same_alphabet(ts.alphabet, p.alphabet)
    if not 0 <= start < ts.n_states:
        raise InvalidConfigError(f"start state {start} is not in 0..{ts.n_states - 1}")
    final = reached_states(ts.delta, start, p) if len(p) else frozenset()
    return Dfa(ts.alphabet, ts.delta, final, start)


def score(ts: TransitionSystem, p: Sample, n: int) -> tuple[int, int]:
    """(best count, smallest start state attaining it)."""
    horizon = 2 * n - 2
    best: tuple[int, int] | None = None
    for q in range(ts.n_states):
        value = count_accepted_up_to(derive_dfa(ts, q, p), horizon)
        if best is None or value < best[0]:
            best = (value, q)
    assert best is not None
    return best


def random_transition_system(alphabet: Alphabet, n: int, rng: np.random.Generator) -> TransitionSystem:
    if n < 1:
        raise InvalidConfigError("n must be >= 1")
    cells = rng.integers(0, n, size=(n, alphabet.size))
    return TransitionSystem(alphabet, tuple(tuple(int(t) for t in row) for row in cells))


def hill_climb(
    ts: TransitionSystem,
    p: Sample,
    n: int,
    deadline: Deadline | None = None,
    log: Callable[[str], None] | None = None,
) -> tuple[TransitionSystem, int]:
    """Best-improvement descent; ties go to the smallest (q, symbol, target)."""
    deadline = ensure_deadline(deadline)
    current, current_score = ts, score(ts, p, n)[0]
    steps = 0
    while True:
        best_move: tuple[int, int, int] | None = None
        best_score = current_score
        for q in range(current.n_states):
            for symbol in range(current.alphabet.size):
                for target in range(current.n_states):
                    if target == current.delta[q][symbol]:
                        continue
                    deadline.check()
                    value = score(current.with_move(q, symbol, target), p, n)[0]
                    if value < best_score:
                        best_score, best_move = value, (q, symbol, target)
        if best_move is None:
            return current, current_score
        current = current.with_move(*best_move)
        current_score = best_score
        steps += 1
        if log:
            log(f"  step {steps}: move {best_move} -> score {current_score}")


def min_score_learn(
    p: Sample,
    n: int,
    cfg: HeuristicConfig | None = None,
    deadline: Deadline | None = None,
    log: Callable[[str], None] | None = None,
) -> ScoredDfa:
    cfg = cfg or HeuristicConfig(n=n)
    if n < 1 or n * p.alphabet.size == 0:
        raise InvalidConfigError("need at least one state and one symbol")
    if cfg.n != n:
        raise InvalidConfigError(f"config is for n = {cfg.n} but n = {n} was requested")
    deadline = ensure_deadline(deadline)

    best_ts: TransitionSystem | None = None
    best_score: int | None = None
    best_initial: int | None = None
    for run in range(cfg.nb_run):
        rng = make_rng(cfg.seed + run)
        run_ts: TransitionSystem | None = None
        run_score: int | None = None
        for _ in range(cfg.init_rand):
            deadline.check()
            candidate = random_transition_system(p.alphabet, n, rng)
            value = score(candidate, p, n)[0]
            if run_score is None or value < run_score:
                run_ts, run_score = candidate, value
        assert run_ts is not None and run_score is not None
        if best_initial is None or run_score < best_initial:
            best_initial = run_score
        run_ts, run_score = hill_climb(run_ts, p, n, deadline)
        if best_score is None or run_score < best_score:
            best_ts, best_score = run_ts, run_score
        if log:
            log(f"Run {run + 1}/{cfg.nb_run}: run score {run_score}, best score {best_score}")

    assert best_ts is not None
    value, start = score(best_ts, p, n)
    return ScoredDfa(
        dfa=derive_dfa(best_ts, start, p), score=value, start_state=start, n=n, initial_score=best_initial,
    )
