"""
Readers and writers for the plain-text inputs.

Sample files (Abbadingo style)::

    3 2
    0
    1 0
    2 0 1

APN-SAT files::

    p apn 3 2
    + 1 3
    - 2 3
"""

from __future__ import annotations

from collections.abc import Callable, Iterable
from pathlib import Path

from .automata import Alphabet, Word
from .errors import ParseError
from .reduction import ApnSatInstance
from .sample import Sample
from .store import atomic_write_lines, read_input_text


def _ints(tokens: list[str], lineno: int, source: str | None) -> list[int]:
    try:
        return [int(tok) for tok in tokens]
    except ValueError:
        raise ParseError(f"expected integers, got {' '.join(tokens)!r}", line=lineno, source=source) from None


def parse_sample_text(text: str, source: str | None = None) -> Sample:
    lines = text.splitlines()
    header_at = next((i for i, line in enumerate(lines) if line.strip()), None)
    if header_at is None:
        raise ParseError("missing header '<num_words> <alphabet_size>'", line=1, source=source)
    header = lines[header_at].split()
    if len(header) != 2:
        raise ParseError("header must be '<num_words> <alphabet_size>'", line=header_at + 1, source=source)
    num_words, sigma = _ints(header, header_at + 1, source)
    if num_words < 0 or sigma < 1:
        raise ParseError("header values out of range", line=header_at + 1, source=source)

    words: list[Word] = []
    for idx in range(header_at + 1, len(lines)):
        lineno = idx + 1
        tokens = lines[idx].split()
        if not tokens:
            continue
        values = _ints(tokens, lineno, source)
        length, symbols = values[0], values[1:]
        if length != len(symbols):
            raise ParseError(f"declared length {length} but found {len(symbols)} symbols", line=lineno, source=source)
        for sym in symbols:
            if not 0 <= sym < sigma:
                raise ParseError(f"symbol {sym} is not in 0..{sigma - 1}", line=lineno, source=source)
        words.append(tuple(symbols))
    if len(words) != num_words:
        raise ParseError(f"header announces {num_words} words but {len(words)} were found", line=header_at + 1, source=source)
    return Sample.from_words(Alphabet.of_size(sigma), words)


def read_sample(path: str | Path, log: Callable[[str], None] | None = None) -> Sample:
    path = Path(path)
    if log:
        log(f"Reading sample {path}...")
    sample = parse_sample_text(read_input_text(path), source=str(path))
    if log:
        log(f"Found {len(sample)} distinct words over {sample.alphabet.size} symbols")
    return sample


def format_word_line(word: Word) -> str:
    return " ".join(str(x) for x in (len(word), *word))


def write_sample(sample: Sample, path: str | Path) -> None:
    write_word_lines(path, sample.alphabet.size, len(sample), sample.sorted_words())


def write_word_lines(path: str | Path, sigma: int, count: int, words: Iterable[Word]) -> None:
    """Stream `count` distinct words to a sample file without building a Sample."""

    def lines() -> Iterable[str]:
        yield f"{count} {sigma}"
        written = 0
        for word in words:
            written += 1
            yield format_word_line(word)
        if written != count:
            raise ValueError(f"expected {count} words, got {written}")

    atomic_write_lines(Path(path), lines())


def parse_apn_text(text: str, source: str | None = None) -> ApnSatInstance:
    header: tuple[int, int] | None = None
    positive: list[frozenset[int]] = []
    negative: list[frozenset[int]] = []
    for idx, raw in enumerate(text.splitlines()):
        lineno = idx + 1
        tokens = raw.split()
        if not tokens or tokens[0] == "c":
            continue
        if header is None:
            if len(tokens) != 4 or tokens[0] != "p" or tokens[1] != "apn":
                raise ParseError("header must be 'p apn <r> <s>'", line=lineno, source=source)
            r, s = _ints(tokens[2:], lineno, source)
            if r < 1 or s < 0:
                raise ParseError("need r >= 1 and s >= 0", line=lineno, source=source)
            header = (r, s)
            continue
        sign = tokens[0]
        if sign not in ("+", "-"):
            raise ParseError(f"clause must start with '+' or '-', got {sign!r}", line=lineno, source=source)
        members = _ints(tokens[1:], lineno, source)
        if not members:
            raise ParseError("empty clause", line=lineno, source=source)
        r = header[0]
        for i in members:
            if not 1 <= i <= r:
                raise ParseError(f"variable {i} is not in 1..{r}", line=lineno, source=source)
        (positive if sign == "+" else negative).append(frozenset(members))
    if header is None:
        raise ParseError("missing header 'p apn <r> <s>'", line=1, source=source)
    if len(positive) + len(negative) != header[1]:
        raise ParseError(
            f"header announces {header[1]} clauses but {len(positive) + len(negative)} were found",
            line=1,
            source=source,
        )
    return ApnSatInstance(header[0], tuple(positive), tuple(negative))


def read_apn(path: str | Path) -> ApnSatInstance:
    path = Path(path)
    return parse_apn_text(read_input_text(path), source=str(path))


def format_apn(inst: ApnSatInstance) -> str:
    lines = [f"p apn {inst.r} {inst.s}"]
    for clause in inst.positive_clauses:
        lines.append("+ " + " ".join(str(i) for i in sorted(clause)))
    for clause in inst.negative_clauses:
        lines.append("- " + " ".join(str(i) for i in sorted(clause)))
    return "\n".join(lines) + "\n"
