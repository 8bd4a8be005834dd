"""
Ways to solve an `IlpModel`.

Every solver exposes `solve(model, deadline=None) -> IlpSolution`:

- `ExternalSolver` writes the LP file, runs a user command such as
  ``cbc {lp} solve solu {sol}`` wrapped to honour the solution-file contract,
  and reads the solution back.
- `EnumerationSolver` tries every small table and final set against the
  model constraints themselves; it is the reference when no external
  solver is configured.

The answers of both are verified by `decode_solution` before use.
"""

from __future__ import annotations

import itertools
import shlex
import subprocess
import tempfile
from collections.abc import Callable
from pathlib import Path
from typing import Protocol

from .automata import Dfa, trivial_dfa
from .counting import count_accepted_up_to, words_up_to
from .defaults import ORACLE_GUARD, SOLVER_PLACEHOLDERS
from .errors import (
    GuardExceededError,
    InvalidConfigError,
    ParseError,
    SolverProtocolError,
    SolverUnavailableError,
    TimeLimitExceeded,
)
from .ilp_model import (
    XF,
    IlpModel,
    IlpSolution,
    assignment_from_dfa,
    build_model,
    check_assignment,
    decode_solution,
    feasibility_model,
)
from .limits import Deadline, ensure_deadline
from .lp_format import emit_lp, read_solution
from .oracle import enumeration_size
from .sample import Sample
from .store import atomic_write_text
from .subprocess_utils import run_capture


class Solver(Protocol):
    def solve(self, model: IlpModel, deadline: Deadline | None = None) -> IlpSolution: ...


def _solver_argv(command: str, lp_path: Path, sol_path: Path) -> list[str]:
    missing = [ph for ph in SOLVER_PLACEHOLDERS if ph not in command]
    if missing:
        raise InvalidConfigError(f"solver command must contain {' and '.join(missing)}: {command!r}")
    try:
        tokens = shlex.split(command)
    except ValueError as exc:
        raise InvalidConfigError(f"cannot parse solver command {command!r}: {exc}") from exc
    if not tokens:
        raise SolverUnavailableError("empty solver command")
    return [tok.replace("{lp}", str(lp_path)).replace("{sol}", str(sol_path)) for tok in tokens]


def solve_external(
    lp_document: str,
    solver_command: str | None,
    *,
    timeout_ms: float | None = None,
    log: Callable[[str], None] | None = None,
) -> IlpSolution:
    if not solver_command:
        raise SolverUnavailableError("no ILP solver configured (use --solver-cmd or MINCOUNT_SOLVER_CMD)")
    with tempfile.TemporaryDirectory(prefix="mincount-") as tmp:
        lp_path = Path(tmp) / "model.lp"
        sol_path = Path(tmp) / "model.sol"
        argv = _solver_argv(solver_command, lp_path, sol_path)
        atomic_write_text(lp_path, lp_document)
        if log:
            log(f"Running solver: {' '.join(argv)}")
        timeout = None if timeout_ms is None else timeout_ms / 1000.0
        try:
            result = run_capture(argv, timeout=timeout)
        except (FileNotFoundError, PermissionError) as exc:
            raise SolverUnavailableError(f"cannot start solver {argv[0]!r}: {exc}") from exc
        except subprocess.TimeoutExpired:
            raise TimeLimitExceeded(f"solver did not finish within {timeout_ms} ms") from None
        if result.returncode == 127:
            raise SolverUnavailableError(f"solver command not found: {argv[0]!r}")
        if result.returncode != 0:
            tail = result.stderr.decode("utf-8", errors="replace").strip().splitlines()[-5:]
            raise SolverProtocolError(f"solver exited with status {result.returncode}: {' | '.join(tail)}")
        if not sol_path.exists():
            raise SolverProtocolError("solver did not write a solution file")
        try:
            return read_solution(sol_path)
        except ParseError as exc:
            raise SolverProtocolError(f"unreadable solution file: {exc}") from exc


class ExternalSolver:
    def __init__(self, command: str | None, log: Callable[[str], None] | None = None):
        self.command = command
        self.log = log

    def solve(self, model: IlpModel, deadline: Deadline | None = None) -> IlpSolution:
        deadline = ensure_deadline(deadline)
        deadline.check()
        remaining = deadline.remaining_seconds()
        return solve_external(
            emit_lp(model),
            self.command,
            timeout_ms=None if remaining is None else remaining * 1000.0,
            log=self.log,
        )


class EnumerationSolver:
    """Exhausts every n-state table and final set, keeping the assignments the model accepts."""

    def __init__(self, guard: int = ORACLE_GUARD):
        self.guard = guard

    def solve(self, model: IlpModel, deadline: Deadline | None = None) -> IlpSolution:
        if model.sample is None:
            raise InvalidConfigError("model was built without its sample")
        p, n = model.sample, model.n
        sigma = p.alphabet.size
        size = enumeration_size(n, sigma)
        if size > self.guard:
            raise GuardExceededError(
                f"{size} assignments to enumerate for n={n}, sigma={sigma} exceeds the guard of {self.guard}"
            )
        deadline = ensure_deadline(deadline)
        bounded = any(c.name == "bound_xF" for c in model.constraints)

        best: dict[str, int] | None = None
        for cells in itertools.product(range(n), repeat=n * sigma):
            deadline.check()
            delta = tuple(cells[q * sigma:(q + 1) * sigma] for q in range(n))
            for bits in range(2**n):
                final = frozenset(q for q in range(n) if bits >> q & 1)
                values = assignment_from_dfa(Dfa(p.alphabet, delta, final, 0), p, n)
                if best is not None and values[XF] >= best[XF]:
                    continue
                if check_assignment(model, values) is not None:
                    continue
                if bounded:
                    return IlpSolution("feasible", values)
                best = values
        if best is None:
            return IlpSolution("infeasible", {})
        return IlpSolution("optimal", best)


def solve_min(p: Sample, n: int, solver: Solver, deadline: Deadline | None = None) -> tuple[Dfa, int]:
    model = build_model(p, n)
    sol = solver.solve(model, deadline)
    if sol.status == "infeasible":
        raise SolverProtocolError("solver claims the model is infeasible, but the trivial DFA always fits")
    dfa = decode_solution(model, sol)
    return dfa, count_accepted_up_to(dfa, 2 * n - 2)


def binary_search_min(
    p: Sample,
    n: int,
    solver: Solver,
    deadline: Deadline | None = None,
    log: Callable[[str], None] | None = None,
) -> tuple[Dfa, int, int]:
    """(DFA, its count, feasibility queries issued)."""
    if n < 1:
        raise InvalidConfigError("n must be >= 1")
    m = 2 * n - 2
    lo = p.count_up_to(m)
    best = trivial_dfa(p.alphabet)
    hi = words_up_to(p.alphabet.size, m)
    queries = 0
    while lo < hi:
        mid = (lo + hi) // 2
        model = feasibility_model(p, n, mid)
        sol = solver.solve(model, deadline)
        queries += 1
        if sol.status in ("optimal", "feasible"):
            best = decode_solution(model, sol)
            hi = count_accepted_up_to(best, m)
        elif sol.status == "infeasible":
            lo = mid + 1
        else:
            raise SolverProtocolError(f"solver could not decide the bound {mid} (status {sol.status})")
        if log:
            log(f"Query {queries}: count <= {mid}? {sol.status}; bracket [{lo}, {hi}]")
    return best, hi, queries
