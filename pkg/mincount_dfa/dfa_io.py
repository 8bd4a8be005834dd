"""
DFA files (`.dfa.json`).

    {"alphabet": ["a", "b"], "states": 2, "init": 0,
     "delta": [[1, 0], [1, 1]], "final": [1]}

Writers always emit the canonical layout (init = 0, sorted finals).
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from .automata import Alphabet, Dfa
from .errors import InvalidDfaError, InvalidWordError, ParseError
from .store import atomic_write_text, read_input_text


def dfa_to_json(dfa: Dfa) -> dict[str, Any]:
    dfa = dfa.canonical()
    return {
        "alphabet": list(dfa.alphabet.symbols),
        "states": dfa.n_states,
        "init": 0,
        "delta": [list(row) for row in dfa.delta],
        "final": sorted(dfa.final),
    }


def format_dfa(dfa: Dfa) -> str:
    data = dfa_to_json(dfa)
    # one transition row per line
    rows = ",\n    ".join(json.dumps(row) for row in data["delta"])
    return (
        "{\n"
        f'  "alphabet": {json.dumps(data["alphabet"], ensure_ascii=False)},\n'
        f'  "states": {data["states"]},\n'
        f'  "init": 0,\n'
        f'  "delta": [\n    {rows}\n  ],\n'
        f'  "final": {json.dumps(data["final"])}\n'
        "}\n"
    )


def write_dfa(dfa: Dfa, path: Path) -> None:
    atomic_write_text(Path(path), format_dfa(dfa))


def dfa_from_json(data: Any, *, source: str | None = None) -> Dfa:
    if not isinstance(data, dict):
        raise ParseError("expected a JSON object", source=source)
    missing = [k for k in ("alphabet", "states", "init", "delta", "final") if k not in data]
    if missing:
        raise ParseError(f"missing keys: {', '.join(missing)}", source=source)
    alphabet_raw, states, init, delta, final = (
        data["alphabet"], data["states"], data["init"], data["delta"], data["final"],
    )
    if not isinstance(alphabet_raw, list) or not all(isinstance(s, str) for s in alphabet_raw):
        raise ParseError('"alphabet" must be an array of strings', source=source)
    if not _is_int(states) or states < 1:
        raise ParseError('"states" must be a positive integer', source=source)
    if not _is_int(init):
        raise ParseError('"init" must be an integer', source=source)
    if not isinstance(delta, list) or len(delta) != states:
        raise ParseError(f'"delta" must have exactly {states} rows', source=source)
    for q, row in enumerate(delta):
        if not isinstance(row, list) or len(row) != len(alphabet_raw) or not all(_is_int(t) for t in row):
            raise ParseError(f"delta row {q} is not a total row of {len(alphabet_raw)} integers", source=source)
    if not isinstance(final, list) or not all(_is_int(q) for q in final):
        raise ParseError('"final" must be an array of integers', source=source)
    try:
        return Dfa(Alphabet(tuple(alphabet_raw)), tuple(tuple(row) for row in delta), frozenset(final), init)
    except (InvalidDfaError, InvalidWordError) as exc:
        raise ParseError(str(exc), source=source) from exc


def _is_int(value: Any) -> bool:
    return isinstance(value, int) and not isinstance(value, bool)


def read_dfa(path: Path) -> Dfa:
    path = Path(path)
    try:
        data = json.loads(read_input_text(path))
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", line=exc.lineno, source=str(path)) from exc
    return dfa_from_json(data, source=str(path))
