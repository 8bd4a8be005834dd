"""
LP text format writer and the solution-file reader.

Solution files are what a solver command must leave behind::

    STATUS optimal
    t_0_0_1 1
    f_1 1
    xF 2

Variables that are not listed are 0.
"""

from __future__ import annotations

from collections.abc import Iterable
from fractions import Fraction
from pathlib import Path

from .errors import ModelNameCollisionError, ParseError
from .ilp_model import BINARY, GENERAL, IlpModel, IlpSolution, Value
from .store import atomic_write_text, read_input_text

STATUSES = ("optimal", "feasible", "infeasible", "unknown")
LINE_WIDTH = 200


def _format_terms(terms: Iterable[tuple[int, str]]) -> list[str]:
    tokens: list[str] = []
    for coef, name in terms:
        sign = "-" if coef < 0 else "+"
        magnitude = abs(coef)
        body = name if magnitude == 1 else f"{magnitude} {name}"
        if not tokens:
            tokens.append(body if sign == "+" else f"- {body}")
        else:
            tokens.append(f"{sign} {body}")
    return tokens


def _wrap(head: str, tokens: list[str]) -> list[str]:
    lines: list[str] = []
    current = head
    for tok in tokens:
        if len(current) + 1 + len(tok) > LINE_WIDTH and current.strip():
            lines.append(current)
            current = "   " + tok
        else:
            current = f"{current} {tok}" if current else tok
    lines.append(current)
    return lines


def _check_names(model: IlpModel) -> None:
    seen: set[str] = set()
    for var in model.variables:
        if var.name in seen:
            raise ModelNameCollisionError(f"duplicate variable name {var.name}")
        seen.add(var.name)
    names: set[str] = set()
    for con in model.constraints:
        if con.name in names or con.name in seen:
            raise ModelNameCollisionError(f"duplicate constraint name {con.name}")
        names.add(con.name)
        for _, ref in con.terms:
            if ref not in seen:
                raise ModelNameCollisionError(f"constraint {con.name} references unknown variable {ref}")


def emit_lp(model: IlpModel) -> str:
    _check_names(model)
    out = ["\\ min-count DFA learning", "Minimize" if model.sense == "minimize" else "Maximize"]
    objective = list(model.objective)
    if not objective and model.variables:
        objective = [(0, model.variables[0].name)]
    if objective:
        # a zero coefficient has to be written out explicitly
        tokens = [f"0 {name}" for _, name in objective] if all(c == 0 for c, _ in objective) else _format_terms(objective)
        out += _wrap(" obj:", tokens)
    else:
        out.append(" obj:")

    out.append("Subject To")
    for con in model.constraints:
        tokens = _format_terms(con.terms) + [con.relation, str(con.rhs)]
        out += _wrap(f" {con.name}:", tokens)

    out.append("Bounds")
    for var in model.variables:
        if var.kind == BINARY:
            continue
        if var.upper is None:
            out.append(f" {var.name} >= {var.lower}")
        else:
            out.append(f" {var.lower} <= {var.name} <= {var.upper}")

    binaries = [v.name for v in model.variables if v.kind == BINARY]
    generals = [v.name for v in model.variables if v.kind == GENERAL]
    if binaries:
        out.append("Binary")
        out += _wrap("", binaries)
    if generals:
        out.append("General")
        out += _wrap("", generals)
    out.append("End")
    return "\n".join(out) + "\n"


def write_lp(model: IlpModel, path: Path) -> None:
    atomic_write_text(Path(path), emit_lp(model))


def _number(token: str, lineno: int, source: str | None) -> Value:
    try:
        value = Fraction(token)
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"bad value {token!r}", line=lineno, source=source) from None
    return int(value) if value.denominator == 1 else value


def parse_solution_text(text: str, source: str | None = None) -> IlpSolution:
    status: str | None = None
    assignment: dict[str, Value] = {}
    for idx, raw in enumerate(text.splitlines()):
        lineno = idx + 1
        tokens = raw.split()
        if not tokens:
            continue
        if status is None:
            if len(tokens) != 2 or tokens[0].upper() != "STATUS":
                raise ParseError("first line must be 'STATUS <optimal|feasible|infeasible|unknown>'", line=lineno, source=source)
            status = tokens[1].lower()
            if status not in STATUSES:
                raise ParseError(f"unknown status {tokens[1]!r}", line=lineno, source=source)
            continue
        if len(tokens) != 2:
            raise ParseError("expected '<name> <value>'", line=lineno, source=source)
        name, value = tokens
        if name in assignment:
            raise ParseError(f"variable {name} listed twice", line=lineno, source=source)
        assignment[name] = _number(value, lineno, source)
    if status is None:
        raise ParseError("empty solution file", line=1, source=source)
    return IlpSolution(status, assignment)


def read_solution(path: Path) -> IlpSolution:
    path = Path(path)
    return parse_solution_text(read_input_text(path), source=str(path))


def format_solution(sol: IlpSolution) -> str:
    lines = [f"STATUS {sol.status}"]
    lines += [f"{name} {value}" for name, value in sol.assignment.items()]
    return "\n".join(lines) + "\n"
