"""
Integer program for learning a DFA with the fewest accepted short words.

Variable families (n states, alphabet size sigma, m = 2n-2, trie node u):

    t_p_a_q       binary   delta(p, a) = q
    f_q           binary   q is final
    w_u_q         binary   the prefix u ends in q
    c_q_k         integer  words of length k ending in q            0..sigma^k
    cp_p_a_q_k    integer  share of c_p_k sent to q along (p, a)     0..sigma^k
    cf_q_k        integer  c_q_k if q is final, else 0               0..sigma^k
    xF            integer  accepted words of length <= m             0..M_F

Counting constraints only bound the counts from below, so a feasible
assignment may overstate them; the minimum of xF is exact.
"""

from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass, field
from fractions import Fraction

from .automata import Dfa
from .counting import count_accepted_up_to, count_vectors, words_up_to
from .errors import InvalidAssignmentError, InvalidConfigError, SolverProtocolError
from .sample import Sample

BINARY = "binary"
GENERAL = "general"

Value = int | Fraction


@dataclass(frozen=True)
class IlpVariable:
    name: str
    kind: str = GENERAL
    lower: int = 0
    upper: int | None = None

    def __post_init__(self) -> None:
        if self.kind == BINARY and (self.lower, self.upper) != (0, 1):
            object.__setattr__(self, "lower", 0)
            object.__setattr__(self, "upper", 1)


@dataclass(frozen=True)
class IlpConstraint:
    name: str
    terms: tuple[tuple[int, str], ...]
    relation: str
    rhs: int

    def __post_init__(self) -> None:
        if self.relation not in ("<=", "=", ">="):
            raise ValueError(f"unknown relation {self.relation!r}")

    def lhs(self, values: Mapping[str, Value]) -> Value:
        return sum((coef * values.get(name, 0) for coef, name in self.terms), 0)

    def holds(self, values: Mapping[str, Value]) -> bool:
        lhs = self.lhs(values)
        if self.relation == "<=":
            return lhs <= self.rhs
        if self.relation == ">=":
            return lhs >= self.rhs
        return lhs == self.rhs


@dataclass(frozen=True)
class IlpModel:
    variables: tuple[IlpVariable, ...]
    constraints: tuple[IlpConstraint, ...]
    objective: tuple[tuple[int, str], ...] = ()
    sense: str = "minimize"
    n: int = 1
    sample: Sample | None = field(default=None, compare=False, repr=False)

    def variable_map(self) -> dict[str, IlpVariable]:
        return {v.name: v for v in self.variables}

    def constraint_names(self) -> list[str]:
        return [c.name for c in self.constraints]


@dataclass(frozen=True)
class IlpSolution:
    status: str
    assignment: dict[str, Value] = field(default_factory=dict)

    @property
    def objective_value(self) -> Value | None:
        return self.assignment.get("xF")

    @property
    def has_values(self) -> bool:
        return self.status in ("optimal", "feasible")


# --- names ---


def t_var(p: int, a: int, q: int) -> str:
    return f"t_{p}_{a}_{q}"


def f_var(q: int) -> str:
    return f"f_{q}"


def w_var(u: int, q: int) -> str:
    return f"w_{u}_{q}"


def c_var(q: int, k: int) -> str:
    return f"c_{q}_{k}"


def cp_var(p: int, a: int, q: int, k: int) -> str:
    return f"cp_{p}_{a}_{q}_{k}"


def cf_var(q: int, k: int) -> str:
    return f"cf_{q}_{k}"


XF = "xF"


def build_model(p: Sample, n: int) -> IlpModel:
    if n < 1:
        raise InvalidConfigError("n must be >= 1")
    sigma = p.alphabet.size
    m = 2 * n - 2
    mf = words_up_to(sigma, m)
    big_m = mf + 1
    trie = p.prefix_index
    states = range(n)
    symbols = range(sigma)

    variables: list[IlpVariable] = []
    variables += [IlpVariable(t_var(s, a, q), BINARY) for s in states for a in symbols for q in states]
    variables += [IlpVariable(f_var(q), BINARY) for q in states]
    variables += [IlpVariable(w_var(u, q), BINARY) for u in range(len(trie)) for q in states]
    variables += [IlpVariable(c_var(q, k), GENERAL, 0, sigma**k) for q in states for k in range(m + 1)]
    variables += [
        IlpVariable(cp_var(s, a, q, k), GENERAL, 0, sigma**k)
        for s in states for a in symbols for q in states for k in range(m)
    ]
    variables += [IlpVariable(cf_var(q, k), GENERAL, 0, sigma**k) for q in states for k in range(m + 1)]
    variables.append(IlpVariable(XF, GENERAL, 0, mf))

    cons: list[IlpConstraint] = []

    def add(name: str, terms: list[tuple[int, str]], relation: str, rhs: int) -> None:
        cons.append(IlpConstraint(name, tuple(terms), relation, rhs))

    for s in states:
        for a in symbols:
            add(f"dfa_{s}_{a}", [(1, t_var(s, a, q)) for q in states], "=", 1)

    add("run_init", [(1, w_var(0, 0))], "=", 1)
    for u in range(len(trie)):
        add(f"run_onehot_{u}", [(1, w_var(u, q)) for q in states], "=", 1)
    for child in range(1, len(trie)):
        parent, a = trie.parent[child], trie.symbol[child]
        for s in states:
            for q in states:
                add(
                    f"run_step_{child}_{s}_{q}",
                    [(1, w_var(parent, s)), (1, t_var(s, a, q)), (-1, w_var(child, q))],
                    "<=",
                    1,
                )
    for u in trie.terminal_nodes():
        for q in states:
            add(f"consistent_{u}_{q}", [(1, w_var(u, q)), (-1, f_var(q))], "<=", 0)

    for q in states:
        add(f"count_init_{q}", [(1, c_var(q, 0))], "=", 1 if q == 0 else 0)
    for k in range(m):
        for s in states:
            for a in symbols:
                for q in states:
                    cp = cp_var(s, a, q, k)
                    t = t_var(s, a, q)
                    add(f"count_step_{s}_{a}_{q}_{k}", [(1, c_var(s, k)), (-1, cp), (big_m, t)], "<=", big_m)
                    add(f"count_gate_{s}_{a}_{q}_{k}", [(1, cp), (-big_m, t)], "<=", 0)
    for k in range(1, m + 1):
        for q in states:
            terms = [(1, c_var(q, k))]
            terms += [(-1, cp_var(s, a, q, k - 1)) for s in states for a in symbols]
            add(f"count_sum_{q}_{k}", terms, "=", 0)
    for q in states:
        for k in range(m + 1):
            add(f"final_count_{q}_{k}", [(1, c_var(q, k)), (-1, cf_var(q, k)), (big_m, f_var(q))], "<=", big_m)
            add(f"final_gate_{q}_{k}", [(1, cf_var(q, k)), (-big_m, f_var(q))], "<=", 0)
    add("final_total", [(1, XF)] + [(-1, cf_var(q, k)) for q in states for k in range(m + 1)], "=", 0)

    return IlpModel(tuple(variables), tuple(cons), ((1, XF),), "minimize", n, p)


def feasibility_model(p: Sample, n: int, k: int) -> IlpModel:
    """Is there a DFA with n states accepting p and at most k words up to length 2n-2?"""
    base = build_model(p, n)
    bound = IlpConstraint("bound_xF", ((1, XF),), "<=", k)
    return IlpModel(base.variables, base.constraints + (bound,), (), "minimize", n, p)


def _padded_delta(dfa: Dfa, n: int) -> list[tuple[int, ...]]:
    if dfa.n_states > n:
        raise InvalidConfigError(f"DFA has {dfa.n_states} states, more than n = {n}")
    delta = list(dfa.delta)
    # unused states loop on themselves and stay unreachable
    delta += [tuple([q] * dfa.sigma) for q in range(dfa.n_states, n)]
    return delta


def assignment_from_dfa(dfa: Dfa, p: Sample, n: int) -> dict[str, int]:
    """The variable values a DFA induces (its init becomes state 0)."""
    dfa = dfa.canonical()
    delta = _padded_delta(dfa, n)
    padded = Dfa(dfa.alphabet, tuple(delta), dfa.final, 0)
    sigma = dfa.sigma
    m = 2 * n - 2
    values: dict[str, int] = {}
    for s in range(n):
        for a in range(sigma):
            for q in range(n):
                values[t_var(s, a, q)] = int(delta[s][a] == q)
    for q in range(n):
        values[f_var(q)] = int(q in padded.final)
    runs = p.prefix_index.run(delta, 0)
    for u, reached in enumerate(runs):
        for q in range(n):
            values[w_var(u, q)] = int(reached == q)
    vectors = count_vectors(padded, m)
    for k, vector in enumerate(vectors):
        for q in range(n):
            values[c_var(q, k)] = vector[q]
            values[cf_var(q, k)] = vector[q] if q in padded.final else 0
    for k in range(m):
        for s in range(n):
            for a in range(sigma):
                for q in range(n):
                    values[cp_var(s, a, q, k)] = vectors[k][s] if delta[s][a] == q else 0
    values[XF] = count_accepted_up_to(padded, m)
    return values


def check_assignment(model: IlpModel, values: Mapping[str, Value]) -> str | None:
    """Name of the first violated integrality, bound or constraint; None if all hold."""
    known = model.variable_map()
    for name in values:
        if name not in known:
            return f"unknown:{name}"
    for var in model.variables:
        value = values.get(var.name, 0)
        if isinstance(value, Fraction) and value.denominator != 1:
            return f"integrality:{var.name}"
        if value < var.lower or (var.upper is not None and value > var.upper):
            return f"bound:{var.name}"
    for con in model.constraints:
        if not con.holds(values):
            return con.name
    return None


def decode_solution(model: IlpModel, sol: IlpSolution) -> Dfa:
    if not sol.has_values:
        raise SolverProtocolError(f"solver returned status {sol.status!r}, no assignment to decode")
    if model.sample is None:
        raise InvalidConfigError("model was built without its sample")
    violated = check_assignment(model, sol.assignment)
    if violated is not None:
        raise InvalidAssignmentError(f"solution violates {violated}", constraint=violated)

    n, p = model.n, model.sample
    sigma = p.alphabet.size
    values = sol.assignment
    delta = tuple(
        tuple(next(q for q in range(n) if values.get(t_var(s, a, q), 0) == 1) for a in range(sigma))
        for s in range(n)
    )
    final = frozenset(q for q in range(n) if values.get(f_var(q), 0) == 1)
    dfa = Dfa(p.alphabet, delta, final, 0)

    recount = count_accepted_up_to(dfa, 2 * n - 2)
    claimed = int(values.get(XF, 0))
    if recount > claimed:
        raise InvalidAssignmentError(f"xF = {claimed} but the DFA accepts {recount} words", constraint="final_total")
    if sol.status == "optimal" and model.objective and recount != claimed:
        raise InvalidAssignmentError(
            f"optimal xF = {claimed} but the decoded DFA accepts {recount} words",
            constraint="final_total",
        )
    return dfa
