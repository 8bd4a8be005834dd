"""
APN-SAT to min-count DFA learning.

From an instance (variables x_1..x_r, positive and negative clauses) this
module builds the positive word set P over {a, b}, the state bound n and the
error budget k, and from a satisfying valuation a witness DFA with at most n
states that accepts P plus exactly M*r + s*(s+T-1) further words of length
at most m = 2n-2.

Clauses are numbered positives first, then negatives, each group in input
order. Variables and clauses are 1-based throughout.

Word sets at proof scale are large (r=3, s=2 already gives d=463), so the
strata are kept symbolic (see `word_sets`) and only expanded on request.
"""

from __future__ import annotations

import itertools
from collections.abc import Callable, Iterator, Mapping
from dataclasses import dataclass, field

from .automata import Alphabet, Dfa, Word
from .counting import count_accepted_up_to
from .defaults import VALUATION_GUARD
from .errors import GuardExceededError, InvalidConfigError, InvalidValuationError
from .sample import Sample
from .word_sets import WordSet, concat, literal, power, powers, pumped, union

AB = Alphabet(("a", "b"))
A, B = 0, 1

Valuation = Mapping[int, bool]


@dataclass(frozen=True)
class ApnSatInstance:
    r: int
    positive_clauses: tuple[frozenset[int], ...] = ()
    negative_clauses: tuple[frozenset[int], ...] = ()

    def __post_init__(self) -> None:
        if self.r < 1:
            raise InvalidConfigError("an APN-SAT instance needs at least one variable")
        pos = tuple(frozenset(c) for c in self.positive_clauses)
        neg = tuple(frozenset(c) for c in self.negative_clauses)
        for clause in pos + neg:
            if not clause:
                raise InvalidConfigError("clauses must be non-empty")
            if any(not 1 <= i <= self.r for i in clause):
                raise InvalidConfigError(f"clause {sorted(clause)} mentions a variable outside 1..{self.r}")
        object.__setattr__(self, "positive_clauses", pos)
        object.__setattr__(self, "negative_clauses", neg)

    @property
    def s(self) -> int:
        return len(self.positive_clauses) + len(self.negative_clauses)

    @property
    def clauses(self) -> list[tuple[frozenset[int], bool]]:
        """(members, is_positive) for C_1..C_s."""
        return [(c, True) for c in self.positive_clauses] + [(c, False) for c in self.negative_clauses]

    def clause(self, j: int) -> tuple[frozenset[int], bool]:
        return self.clauses[j - 1]

    def app(self, i: int) -> list[int]:
        return [j for j, (members, _) in enumerate(self.clauses, start=1) if i in members]

    def not_app(self, i: int) -> list[int]:
        return [j for j, (members, _) in enumerate(self.clauses, start=1) if i not in members]


def pad_instance(inst: ApnSatInstance) -> ApnSatInstance:
    """Add an unused dummy variable so that r >= 2."""
    if inst.r >= 2:
        return inst
    return ApnSatInstance(2, inst.positive_clauses, inst.negative_clauses)


# --- valuations ---------------------------------------------------------------


def is_satisfied(inst: ApnSatInstance, nu: Valuation) -> bool:
    for members, positive in inst.clauses:
        if not any(bool(nu.get(i, False)) == positive for i in members):
            return False
    return True


def find_satisfying_valuation(inst: ApnSatInstance, guard: int = VALUATION_GUARD) -> dict[int, bool] | None:
    """First satisfying valuation in binary counting order (False before True), or None."""
    if inst.r > guard:
        raise GuardExceededError(f"exhaustive valuation search over {inst.r} variables exceeds the guard of {guard}")
    for bits in itertools.product((False, True), repeat=inst.r):
        nu = {i: bits[i - 1] for i in range(1, inst.r + 1)}
        if is_satisfied(inst, nu):
            return nu
    return None


def parse_valuation(text: str) -> dict[int, bool]:
    """Parse '1=T 2=F 3=true' (commas allowed as separators)."""
    nu: dict[int, bool] = {}
    for token in text.replace(",", " ").split():
        name, sep, value = token.partition("=")
        if not sep:
            raise InvalidValuationError(f"expected '<index>=T|F', got {token!r}")
        try:
            index = int(name.lstrip("xX"))
        except ValueError:
            raise InvalidValuationError(f"bad variable index in {token!r}") from None
        flag = value.strip().lower()
        if flag in ("t", "true", "1"):
            nu[index] = True
        elif flag in ("f", "false", "0"):
            nu[index] = False
        else:
            raise InvalidValuationError(f"bad truth value in {token!r}")
    return nu


def _complete_valuation(inst: ApnSatInstance, original_r: int, nu: Valuation) -> dict[int, bool]:
    missing = [i for i in range(1, original_r + 1) if i not in nu]
    if missing:
        raise InvalidValuationError(f"valuation does not assign variables {missing}")
    extra = [i for i in nu if not 1 <= i <= inst.r]
    if extra:
        raise InvalidValuationError(f"valuation assigns unknown variables {sorted(extra)}")
    return {i: bool(nu.get(i, False)) for i in range(1, inst.r + 1)}


# --- parameters ---------------------------------------------------------------


@dataclass(frozen=True)
class ReductionParams:
    r: int
    s: int
    k: int
    d: int
    M: int
    T: int
    omega1: int
    omega2: int
    n: int
    m: int
    scale: str = "proof"

    @property
    def expected_error_count(self) -> int:
        return self.M * self.r + self.s * (self.s + self.T - 1)


def omega1(r: int, d: int) -> int:
    return d * (2 + r)


def omega2(r: int, s: int, k: int, T: int, M: int) -> int:
    return 18 + s + M + 4 * k + 2 * r + 2 * r * s + r * r * T


def _params(r: int, s: int, k: int, d: int, M: int, T: int, scale: str) -> ReductionParams:
    w1 = omega1(r, d)
    w2 = omega2(r, s, k, T, M)
    n = w1 + w2
    return ReductionParams(r=r, s=s, k=k, d=d, M=M, T=T, omega1=w1, omega2=w2, n=n, m=2 * n - 2, scale=scale)


def choose_params(inst: ApnSatInstance) -> ReductionParams:
    inst = pad_instance(inst)
    r, s = inst.r, inst.s
    M = 3 * (s + r)
    T = 2 * s + 3 * r
    k = s * (T + s - 1) + M * r
    d = omega2(r, s, k, T, M) + 1
    return _params(r, s, k, d, M, T, "proof")


def tiny_params(
    inst: ApnSatInstance,
    *,
    k: int | None = None,
    d: int = 3,
    T: int = 2,
    M: int = 2,
) -> ReductionParams:
    """Small hand-picked parameters; `check_assumptions` reports what they break."""
    inst = pad_instance(inst)
    if d < 1 or T < 1 or M < 1:
        raise InvalidConfigError("tiny parameters need d, T, M >= 1")
    if k is None:
        k = M * inst.r + inst.s * (inst.s + T - 1)
    if k < 0:
        raise InvalidConfigError("k must be non-negative")
    return _params(inst.r, inst.s, k, d, M, T, "tiny")


def check_assumptions(params: ReductionParams, max_word_length: int) -> dict[str, bool]:
    p = params
    return {
        "A": p.m >= 2 * max_word_length + max(p.r, p.d),
        "B": p.k < p.M * p.T,
        "C": p.n < p.d * (2 + p.r) + p.d,
        "D": p.k <= p.s * (p.T + p.s - 1) + p.M * p.r,
        "census": p.n >= p.omega1 + p.omega2,
        "error_budget": p.k >= p.M * p.r + p.s * (p.s + p.T - 1),
    }


# --- positive words -----------------------------------------------------------


def ind(inst: ApnSatInstance, params: ReductionParams, i: int) -> list[int]:
    """Exponents sigma for which b^sigma is read after q_{x_i}^d in P_Var(i)."""
    s, r = inst.s, inst.r
    blocks = (
        inst.app(i),
        [s + j for j in inst.not_app(i)],
        [2 * s + i + t * r for t in range(params.T)],
    )
    return sorted(set(itertools.chain.from_iterable(blocks)))


def ind_overlaps(inst: ApnSatInstance, params: ReductionParams) -> dict[int, list[int]]:
    """Per variable, the exponents listed by more than one Ind block (normally none)."""
    s, r = inst.s, inst.r
    overlaps: dict[int, list[int]] = {}
    for i in range(1, r + 1):
        seen: dict[int, int] = {}
        for value in itertools.chain(
            inst.app(i),
            (s + j for j in inst.not_app(i)),
            (2 * s + i + t * r for t in range(params.T)),
        ):
            seen[value] = seen.get(value, 0) + 1
        dup = sorted(v for v, c in seen.items() if c > 1)
        if dup:
            overlaps[i] = dup
    return overlaps


@dataclass(frozen=True)
class ReductionWordSet:
    alphabet: Alphabet
    strata: tuple[tuple[str, WordSet], ...]

    def labels(self) -> list[str]:
        return [label for label, _ in self.strata]

    def stratum(self, label: str) -> WordSet:
        for name, ws in self.strata:
            if name == label:
                return ws
        raise KeyError(label)

    def count(self) -> int:
        return sum(ws.count() for _, ws in self.strata)

    def max_length(self) -> int:
        return max((ws.max_length() for _, ws in self.strata), default=0)

    def contains(self, word: Word) -> bool:
        return any(ws.contains(tuple(word)) for _, ws in self.strata)

    def __iter__(self) -> Iterator[Word]:
        for _, ws in self.strata:
            yield from ws

    def rejected_stratum(self, dfa: Dfa) -> str | None:
        """Label of the first stratum with a word the DFA rejects, None if all are accepted."""
        start = frozenset({dfa.init})
        for label, ws in self.strata:
            if not ws.image(dfa.delta, start) <= dfa.final:
                return label
        return None

    def to_sample(self) -> Sample:
        return Sample.from_words(self.alphabet, self)


def generate_positive_set(inst: ApnSatInstance, params: ReductionParams) -> ReductionWordSet:
    inst = pad_instance(inst)
    k, d, M, T = params.k, params.d, params.M, params.T
    s, r = inst.s, inst.r

    u_a = pumped(A, B, k + 1)  # b^x a
    u_b = pumped(B, A, k + 1)  # a^x b
    tail_a = concat(power(A, d + 1), u_a)
    tail_b = concat(power(B, 2 * s + T * r), u_b)

    strata: list[tuple[str, WordSet]] = [
        ("top", concat(literal((A, A)), u_a, union(power(A, d), tail_a))),
        ("bot", concat(literal((A, B)), u_a, union(power(A, d + 1), tail_a))),
    ]
    for i in range(1, r + 1):
        strata.append((
            f"var:{i}",
            concat(
                literal((B, A)), pumped(B, A, M), power(B, i), literal((A,)), power(B, d),
                union(tail_a, powers(B, ind(inst, params, i)), tail_b),
            ),
        ))
    for j, (_, positive) in enumerate(inst.clauses, start=1):
        head = concat(literal((B, B)), power(A, j), literal((B,)), power(B, d))
        strata.append((f"cl:{j}", concat(head, union(power(B, j), tail_b))))
        strata.append((f"cl_acc:{j}", concat(head, union(power(A, d if positive else d + 1), tail_a))))
    return ReductionWordSet(AB, tuple(strata))


# --- witness automaton --------------------------------------------------------


class _Builder:
    def __init__(self) -> None:
        self.names: list[str] = []
        self.index: dict[str, int] = {}
        self.edges: dict[tuple[int, int], int] = {}
        self.final: set[int] = set()

    def add(self, name: str, *, final: bool = False) -> int:
        q = len(self.names)
        self.names.append(name)
        self.index[name] = q
        if final:
            self.final.add(q)
        return q

    def chain(self, names: list[str], symbol: int) -> list[int]:
        states = [self.add(name) for name in names]
        for p, q in zip(states, states[1:]):
            self.edges[(p, symbol)] = q
        return states

    def link(self, p: int, symbol: int, q: int) -> None:
        self.edges[(p, symbol)] = q

    def build(self, reject: int) -> Dfa:
        delta = tuple(
            tuple(self.edges.get((q, sym), reject) for sym in (A, B))
            for q in range(len(self.names))
        )
        return Dfa(AB, delta, frozenset(self.final), 0)


def build_witness_dfa(inst: ApnSatInstance, params: ReductionParams, nu: Valuation) -> Dfa:
    """
    The DFA that certifies a satisfying valuation. Its size is exactly
    omega1 + omega2; every transition not listed goes to the rejecting sink.
    """
    original_r = inst.r
    inst = pad_instance(inst)
    nu = _complete_valuation(inst, original_r, nu)
    if not is_satisfied(inst, nu):
        raise InvalidValuationError("valuation does not satisfy the instance")
    r, s = inst.r, inst.s
    k, d, M, T = params.k, params.d, params.M, params.T
    g = _Builder()

    init = g.add("init")
    q_a = g.add("q_a")
    q_b = g.add("q_b")
    acc = g.add("acc", final=True)
    rej = g.add("rej")

    def sink_branch(tag: str, final_at: int) -> tuple[int, list[int]]:
        # q_tag -b-> u^1 -b-> ... u^{k+1}, each -a-> q_tag^0 -a-> ... q_tag^{d+1}
        root = g.add(f"q_{tag}")
        pump = g.chain([f"q_{tag},u^{x}" for x in range(1, k + 2)], B)
        g.link(root, B, pump[0])
        run = g.chain([f"q_{tag}^{y}" for y in range(d + 2)], A)
        for q in pump:
            g.link(q, A, run[0])
        g.final.add(run[final_at])
        return root, run

    top, top_run = sink_branch("top", d)
    bot, bot_run = sink_branch("bot", d + 1)

    ua = g.chain([f"q_ua^{x}" for x in range(1, k + 2)], B)
    ub = g.chain([f"q_ub^{x}" for x in range(1, k + 2)], A)
    for q in ua:
        g.link(q, A, acc)
    for q in ub:
        g.link(q, B, acc)
    g.link(top_run[-1], B, ua[0])
    g.link(bot_run[-1], B, ua[0])

    var = g.add("q_Var")
    var_pump = g.chain([f"q_Var,u^{x}" for x in range(1, M + 1)], A)
    g.link(var, A, var_pump[0])
    q_x = g.add("q_X")
    for q in var_pump:
        g.link(q, B, q_x)
    heads = g.chain([f"q_x{i}" for i in range(1, r + 1)], B)
    g.link(q_x, B, heads[0])

    entries: dict[int, int] = {}
    for i in range(1, r + 1):
        column = g.chain([f"q_x{i}^{y}" for y in range(d + 1)], B)
        entries[i] = column[0]
        g.link(heads[i - 1], A, column[0])
        g.link(column[-1], A, (top_run if nu[i] else bot_run)[1])

        app, not_app = set(inst.app(i)), set(inst.not_app(i))
        names = (
            [f"x{i} in C{j}" for j in range(1, s + 1)]
            + [f"x{i} notin C{j}" for j in range(1, s + 1)]
            + [f"x{i},{l},{t}" for t in range(T) for l in range(1, r + 1)]
        )
        tail = g.chain(names, B)
        g.link(column[-1], B, tail[0])
        g.link(tail[-1], A, ub[0])
        for j in range(1, s + 1):
            if j in app:
                g.final.add(tail[j - 1])
            if j in not_app:
                g.final.add(tail[s + j - 1])
        for t in range(T):
            g.final.add(tail[2 * s + t * r + i - 1])

    cl = g.add("q_Cl")
    clause_states = g.chain([f"q_C{j}" for j in range(1, s + 1)], A)
    if clause_states:
        g.link(cl, A, clause_states[0])
    for j, (members, positive) in enumerate(inst.clauses, start=1):
        chosen = min(i for i in members if nu[i] == positive)
        g.link(clause_states[j - 1], B, entries[chosen])

    g.link(init, A, q_a)
    g.link(init, B, q_b)
    g.link(q_a, A, top)
    g.link(q_a, B, bot)
    g.link(q_b, A, var)
    g.link(q_b, B, cl)
    return g.build(rej)


# --- audit --------------------------------------------------------------------


@dataclass(frozen=True)
class AuditReport:
    n_states: int
    n_bound: int
    rejected_stratum: str | None
    max_word_length: int
    m: int
    positive_count: int
    error_count: int
    error_bound: int
    expected_error_count: int
    ind_overlaps: dict[int, list[int]] = field(default_factory=dict)
    assumptions: dict[str, bool] = field(default_factory=dict)

    @property
    def states_ok(self) -> bool:
        return self.n_states <= self.n_bound

    @property
    def accepts_all(self) -> bool:
        return self.rejected_stratum is None

    @property
    def errors_ok(self) -> bool:
        return self.accepts_all and self.max_word_length <= self.m and self.error_count <= self.error_bound

    @property
    def passed(self) -> bool:
        return self.states_ok and self.accepts_all and self.errors_ok

    def lines(self) -> list[str]:
        out = [
            f"states: {self.n_states} <= {self.n_bound}: {'ok' if self.states_ok else 'FAIL'}",
            "P in L(A): ok" if self.accepts_all else f"P in L(A): FAIL (stratum {self.rejected_stratum})",
            f"errors: {self.error_count} <= {self.error_bound}: {'ok' if self.errors_ok else 'FAIL'}"
            f" (expected for a witness: {self.expected_error_count})",
            f"|P| = {self.positive_count}, longest word {self.max_word_length}, m = {self.m}",
        ]
        if self.ind_overlaps:
            out.append(f"Ind overlaps: {self.ind_overlaps}")
        broken = [name for name, ok in self.assumptions.items() if not ok]
        out.append("assumptions: all hold" if not broken else f"assumptions broken: {', '.join(broken)}")
        return out


def audit_suitability(
    dfa: Dfa,
    ws: ReductionWordSet,
    params: ReductionParams,
    inst: ApnSatInstance | None = None,
    log: Callable[[str], None] | None = None,
) -> AuditReport:
    if dfa.sigma != ws.alphabet.size:
        raise InvalidConfigError(f"DFA has {dfa.sigma} symbols, the word set {ws.alphabet.size}")
    positive = ws.count()
    longest = ws.max_length()
    rejected = ws.rejected_stratum(dfa)
    if log:
        log(f"Counting accepted words up to length {params.m} in a {dfa.n_states}-state DFA...")
    accepted = count_accepted_up_to(dfa, params.m)
    # only meaningful when P is inside L(A) and no word of P is longer than m
    error_count = accepted - positive
    return AuditReport(
        n_states=dfa.n_states,
        n_bound=params.n,
        rejected_stratum=rejected,
        max_word_length=longest,
        m=params.m,
        positive_count=positive,
        error_count=error_count,
        error_bound=params.k,
        expected_error_count=params.expected_error_count,
        ind_overlaps=ind_overlaps(pad_instance(inst), params) if inst is not None else {},
        assumptions=check_assumptions(params, longest),
    )


# --- decision problem packaging -------------------------------------------------


@dataclass(frozen=True)
class DecisionInstance:
    words: ReductionWordSet
    n: int
    k_prime: int
    params: ReductionParams

    def sample(self) -> Sample:
        return self.words.to_sample()


def decision_instance(inst: ApnSatInstance, params: ReductionParams | None = None) -> DecisionInstance:
    """Sample, state bound and count budget k' = k + |P| of the learning decision problem."""
    if params is None:
        params = choose_params(inst)
    words = generate_positive_set(inst, params)
    return DecisionInstance(words=words, n=params.n, k_prime=params.k + words.count(), params=params)
