from __future__ import annotations

from pathlib import Path

# Heuristic search
DEFAULT_INIT_RAND = 100
DEFAULT_NB_RUN = 50
DEFAULT_SEED = 0

# Exhaustive searches
ORACLE_GUARD = 10**7
VALUATION_GUARD = 20

# Experiment samples
EXPERIMENT_WORDS = 1000
EXPERIMENT_MIN_LENGTH = 1
EXPERIMENT_MAX_LENGTH = 10
EXPERIMENT_MAX_STATES = 10
EXPERIMENT_ALPHABET_SIZE = 3
EXPERIMENT_FINAL_PROBABILITY = 0.5
EXPERIMENT_DFA_REDRAWS = 50

# External ILP solver
SOLVER_ENV_VAR = "MINCOUNT_SOLVER_CMD"
SOLVER_PLACEHOLDERS = ("{lp}", "{sol}")

RESULTS_CSV_NAME = "bench_results.csv"


def default_results_dir() -> Path:
    """Bench output folder next to where the user runs the tool."""
    return Path.cwd() / "bench_results"


def default_results_path() -> Path:
    return default_results_dir() / RESULTS_CSV_NAME
