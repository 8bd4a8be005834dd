"""
Command-line interface.

Result lines go to standard output as `key=value` pairs; progress goes to
standard error and is silenced by --quiet.
"""

from __future__ import annotations

import argparse
import sys
import time
from collections.abc import Callable
from pathlib import Path

from .automata import Dfa
from .bench import ALGORITHMS, generate_experiment_instance, generate_experiment_sample, run_bench
from .compare import distinguishing_witness
from .counting import count_accepted_up_to
from .defaults import DEFAULT_INIT_RAND, DEFAULT_NB_RUN, DEFAULT_SEED, ORACLE_GUARD, default_results_path
from .deps import resolve_solver_command
from .dfa_io import read_dfa, write_dfa
from .errors import InvalidConfigError, MinCountError, SolverUnavailableError
from .formats import read_apn, read_sample, write_sample, write_word_lines
from .heuristic import HeuristicConfig, min_score_learn
from .ilp_model import build_model, feasibility_model
from .ilp_solvers import EnumerationSolver, ExternalSolver, binary_search_min, solve_min
from .limits import Deadline
from .lp_format import write_lp
from .oracle import enumerate_min_count, enumeration_size
from .report import generate_report, print_report_summary, save_report
from .reduction import (
    audit_suitability,
    build_witness_dfa,
    choose_params,
    decision_instance,
    find_satisfying_valuation,
    parse_valuation,
    tiny_params,
)

Log = Callable[[str], None] | None


def _stderr(message: str) -> None:
    print(message, file=sys.stderr)


def _deadline(args: argparse.Namespace) -> Deadline:
    return Deadline(args.timeout_ms)


def cmd_learn(args: argparse.Namespace, log: Log) -> int:
    sample = read_sample(args.sample, log)
    cfg = HeuristicConfig(n=args.states, init_rand=args.init_rand, nb_run=args.nb_run, seed=args.seed)
    result = min_score_learn(sample, args.states, cfg, _deadline(args), log)
    write_dfa(result.dfa, args.out)
    print(f"score={result.score} start={result.start_state}")
    return 0


def cmd_encode(args: argparse.Namespace, log: Log) -> int:
    sample = read_sample(args.sample, log)
    if args.bound is None:
        model = build_model(sample, args.states)
    else:
        model = feasibility_model(sample, args.states, args.bound)
    write_lp(model, args.out)
    print(f"variables={len(model.variables)} constraints={len(model.constraints)}")
    return 0


def _pick_solver(args: argparse.Namespace, sigma: int, log: Log):
    command = resolve_solver_command(args.solver_cmd)
    if command:
        return ExternalSolver(command, log)
    if enumeration_size(args.states, sigma) <= args.guard:
        if log:
            log("No ILP solver configured; answering by exhaustive enumeration.")
        return EnumerationSolver(args.guard)
    raise SolverUnavailableError("no ILP solver configured (use --solver-cmd or MINCOUNT_SOLVER_CMD)")


def cmd_solve(args: argparse.Namespace, log: Log) -> int:
    sample = read_sample(args.sample, log)
    solver = _pick_solver(args, sample.alphabet.size, log)
    if args.binary_search:
        dfa, count, queries = binary_search_min(sample, args.states, solver, _deadline(args), log)
    else:
        dfa, count = solve_min(sample, args.states, solver, _deadline(args))
        queries = 1
    write_dfa(dfa, args.out)
    print(f"count={count} queries={queries}")
    return 0


def cmd_oracle(args: argparse.Namespace, log: Log) -> int:
    sample = read_sample(args.sample, log)
    result = enumerate_min_count(sample, args.states, guard=args.guard, deadline=_deadline(args), log=log)
    if args.out:
        write_dfa(result.witness, args.out)
    if args.k is None:
        print(f"min_count={result.min_count}")
    else:
        print(f"decision={'true' if result.min_count <= args.k else 'false'}")
    return 0


def cmd_reduce(args: argparse.Namespace, log: Log) -> int:
    inst = read_apn(args.apn)
    if args.scale == "tiny":
        params = tiny_params(inst, k=args.k, d=args.d, T=args.T, M=args.M)
    else:
        params = choose_params(inst)
    problem = decision_instance(inst, params)
    words = problem.words
    print(f"n={params.n} m={params.m} k={params.k} d={params.d} M={params.M} T={params.T}")
    print(f"words={words.count()} k_prime={problem.k_prime}")

    if args.out_sample:
        if log:
            log(f"Writing {words.count()} words to {args.out_sample}...")
        write_word_lines(args.out_sample, words.alphabet.size, words.count(), iter(words))

    if not (args.witness or args.audit):
        return 0
    if args.valuation:
        nu = parse_valuation(args.valuation)
    else:
        nu = find_satisfying_valuation(inst)
        if nu is None:
            print("satisfiable=false")
            return 1
        if log:
            log("Using valuation " + " ".join(f"{i}={'T' if v else 'F'}" for i, v in sorted(nu.items())))
    dfa = build_witness_dfa(inst, params, nu)
    print(f"witness_states={dfa.n_states}")
    if args.witness:
        write_dfa(dfa, args.witness)
    if args.audit:
        report = audit_suitability(dfa, words, params, inst, log)
        if log:
            for line in report.lines():
                log(line)
        print(f"errors={report.error_count} audit={'pass' if report.passed else 'fail'}")
        return 0 if report.passed else 1
    return 0


def cmd_gen_sample(args: argparse.Namespace, log: Log) -> int:
    sample, hidden = generate_experiment_instance(args.seed, words=args.words)
    write_sample(sample, args.out)
    if args.hidden_out:
        write_dfa(hidden, args.hidden_out)
    print(f"words={len(sample)} hidden_states={hidden.n_states}")
    return 0


def cmd_bench(args: argparse.Namespace, log: Log) -> int:
    if args.sample:
        sample = read_sample(args.sample, log)
        instance = Path(args.sample).stem
    else:
        sample = generate_experiment_sample(args.seed)
        instance = f"experiment-{args.seed}"
    algorithms = [a.strip() for a in args.algos.split(",") if a.strip()]
    if not algorithms:
        raise InvalidConfigError(f"no algorithms given (choose from {', '.join(ALGORITHMS)})")

    start = time.time()
    records = run_bench(
        sample,
        args.states,
        algorithms,
        timeout_ms=args.timeout_ms,
        seed=args.seed,
        repeats=args.repeats,
        jobs=args.jobs,
        results_path=args.results,
        instance=instance,
        solver_command=resolve_solver_command(args.solver_cmd),
        init_rand=args.init_rand,
        nb_run=args.nb_run,
        oracle_guard=args.guard,
        log=log,
    )
    report = generate_report(records, start, time.time(), args.results)
    if args.report_dir:
        report_file = save_report(report, args.report_dir)
        if log:
            log(f"Report saved to: {report_file}")
    print_report_summary(report)
    return 0


def cmd_count(args: argparse.Namespace, log: Log) -> int:
    dfa = read_dfa(args.dfa)
    m = args.m if args.m is not None else 2 * dfa.n_states - 2
    print(f"count={count_accepted_up_to(dfa, m)} m={m}")
    return 0


def cmd_witness(args: argparse.Namespace, log: Log) -> int:
    a: Dfa = read_dfa(args.first)
    b: Dfa = read_dfa(args.second)
    word = distinguishing_witness(a, b)
    if word is None:
        print("equal")
    else:
        print(f"witness={a.alphabet.render(word)}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mincount",
        description="Learn DFAs from positive examples by minimizing the number of short accepted words.",
    )
    parser.add_argument("--seed", type=int, default=DEFAULT_SEED, help="random seed")
    parser.add_argument("--timeout-ms", type=int, default=None, help="wall-clock limit for the search")
    parser.add_argument("--quiet", action="store_true", help="no progress output on stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    def seed_flag(p: argparse.ArgumentParser) -> None:
        p.add_argument("--seed", type=int, default=argparse.SUPPRESS, help="overrides the global --seed")

    def sample_flags(p: argparse.ArgumentParser) -> None:
        p.add_argument("--sample", type=Path, required=True)
        p.add_argument("--states", type=int, required=True, help="state bound n")

    p = sub.add_parser("learn", help="hill-climbing heuristic")
    sample_flags(p)
    p.add_argument("--init-rand", type=int, default=DEFAULT_INIT_RAND)
    p.add_argument("--nb-run", type=int, default=DEFAULT_NB_RUN)
    p.add_argument("--out", type=Path, required=True)
    seed_flag(p)
    p.set_defaults(func=cmd_learn)

    p = sub.add_parser("encode", help="write the integer program as an LP file")
    sample_flags(p)
    p.add_argument("--bound", type=int, default=None, help="emit the feasibility query xF <= BOUND instead")
    p.add_argument("--out", type=Path, required=True)
    p.set_defaults(func=cmd_encode)

    p = sub.add_parser("solve", help="solve the integer program")
    sample_flags(p)
    p.add_argument("--solver-cmd", default=None, help="command template with {lp} and {sol}")
    p.add_argument("--binary-search", action="store_true")
    p.add_argument("--guard", type=int, default=ORACLE_GUARD)
    p.add_argument("--out", type=Path, required=True)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("oracle", help="exhaustive minimum for small instances")
    sample_flags(p)
    p.add_argument("--k", type=int, default=None, help="answer the decision question count <= k")
    p.add_argument("--guard", type=int, default=ORACLE_GUARD)
    p.add_argument("--out", type=Path, default=None)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("reduce", help="build a learning instance from an APN-SAT file")
    p.add_argument("--apn", type=Path, required=True)
    p.add_argument("--out-sample", type=Path, default=None)
    p.add_argument("--witness", type=Path, default=None)
    p.add_argument("--valuation", default=None, help='e.g. "1=T 2=F 3=T"')
    p.add_argument("--audit", action="store_true")
    p.add_argument("--scale", choices=("proof", "tiny"), default="proof")
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--d", type=int, default=3)
    p.add_argument("--T", type=int, default=2)
    p.add_argument("--M", type=int, default=2)
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("gen-sample", help="random experiment sample")
    p.add_argument("--out", type=Path, required=True)
    p.add_argument("--hidden-out", type=Path, default=None)
    p.add_argument("--words", type=int, default=1000)
    seed_flag(p)
    p.set_defaults(func=cmd_gen_sample)

    p = sub.add_parser("bench", help="run and record algorithms")
    p.add_argument("--sample", type=Path, default=None, help="default: an experiment sample drawn from --seed")
    p.add_argument("--states", type=int, required=True)
    p.add_argument("--algos", default="heuristic,oracle")
    p.add_argument("--repeats", type=int, default=1)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--results", type=Path, default=None)
    p.add_argument("--report-dir", type=Path, default=None)
    p.add_argument("--solver-cmd", default=None)
    p.add_argument("--init-rand", type=int, default=DEFAULT_INIT_RAND)
    p.add_argument("--nb-run", type=int, default=DEFAULT_NB_RUN)
    p.add_argument("--guard", type=int, default=ORACLE_GUARD)
    seed_flag(p)
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("count", help="accepted words up to length m")
    p.add_argument("--dfa", type=Path, required=True)
    p.add_argument("--m", type=int, default=None, help="default: 2n-2")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("witness", help="shortest word accepted by exactly one of two DFAs")
    p.add_argument("first", type=Path)
    p.add_argument("second", type=Path)
    p.set_defaults(func=cmd_witness)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "bench" and args.results is None:
        args.results = default_results_path()
    log: Log = None if args.quiet else _stderr
    try:
        return args.func(args, log)
    except MinCountError as exc:
        print(f"Error: {exc}", file=sys.stderr)
        return exc.exit_code
    except OSError as exc:
        print(f"Error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
