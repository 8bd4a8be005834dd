"""
Min-count DFA learning from positive examples (Python).

Learns a DFA with at most n states that accepts every sample word while
accepting as few words of length at most 2n-2 as possible. This package
contains the implementation used by `app.py`.
"""

from . import deps  # noqa: F401  (exits with an install hint when numpy is missing)
from .automata import Alphabet, Dfa, accepts, delta_star, empty_dfa, trivial_dfa
from .compare import LanguageRelation, distinguishing_witness, language_relation
from .counting import count_accepted_up_to, count_vectors, max_count
from .heuristic import HeuristicConfig, ScoredDfa, TransitionSystem, derive_dfa, min_score_learn, score
from .ilp_model import build_model, decode_solution, feasibility_model
from .ilp_solvers import EnumerationSolver, ExternalSolver, binary_search_min, solve_external, solve_min
from .lp_format import emit_lp
from .oracle import certify_language_minimal, decide_count_bound, enumerate_min_count
from .reduction import (
    ApnSatInstance,
    audit_suitability,
    build_witness_dfa,
    choose_params,
    decision_instance,
    generate_positive_set,
)
from .sample import Sample, recognizes_sample
