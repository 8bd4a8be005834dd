from __future__ import annotations

import csv
import json
import os
import threading
from collections.abc import Callable, Iterable, Sequence
from datetime import datetime
from pathlib import Path
from typing import Any

from .errors import ParseError

results_lock = threading.Lock()

RESULTS_HEADER = ("instance", "algo", "n", "seed", "start_score", "final_score", "ms", "status")


def read_input_text(path: Path) -> str:
    """UTF-8 contents of an input file; undecodable bytes are a ParseError at their line."""
    path = Path(path)
    raw = path.read_bytes()
    try:
        return raw.decode("utf-8")
    except UnicodeDecodeError as exc:
        line = raw.count(b"\n", 0, exc.start) + 1
        raise ParseError(f"not valid UTF-8 (byte {exc.start})", line=line, source=str(path)) from None


def atomic_write_text(path: Path, text: str) -> None:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    tmp_file = path.with_name(path.name + ".tmp")
    with open(tmp_file, "w", encoding="utf-8", newline="\n") as f:
        f.write(text)
        f.flush()
        os.fsync(f.fileno())
    tmp_file.replace(path)


def atomic_write_lines(path: Path, lines: Iterable[str]) -> int:
    """Stream lines into a temp file, then move it into place. Returns the line count."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    tmp_file = path.with_name(path.name + ".tmp")
    written = 0
    with open(tmp_file, "w", encoding="utf-8", newline="\n") as f:
        for line in lines:
            f.write(line)
            f.write("\n")
            written += 1
        f.flush()
        os.fsync(f.fileno())
    tmp_file.replace(path)
    return written


def save_json(data: Any, path: Path) -> None:
    atomic_write_text(path, json.dumps(data, indent=2, ensure_ascii=False) + "\n")


def load_json(path: Path, log: Callable[[str], None] | None = print) -> Any:
    try:
        with open(path, "r", encoding="utf-8") as f:
            return json.load(f)
    except (json.JSONDecodeError, UnicodeDecodeError) as exc:
        if log:
            log(f"Warning: Failed to parse {Path(path).name}: {exc}")
        return None


def backup_corrupt_file(path: Path, log: Callable[[str], None] | None = print) -> Path | None:
    path = Path(path)
    try:
        ts = datetime.now().strftime("%Y%m%d-%H%M%S")
        backup = path.with_name(f"{path.stem}.corrupt-{ts}{path.suffix}")
        path.replace(backup)
        if log:
            log(f"Backed up unreadable results to: {backup}")
        return backup
    except OSError as exc:
        if log:
            log(f"Warning: Could not back up {path.name}: {exc}")
        return None


def initialize_results(path: Path, log: Callable[[str], None] | None = print) -> Path:
    """Make sure `path` is a results CSV with the expected header."""
    path = Path(path)
    with results_lock:
        if path.exists():
            header = _read_header(path)
            if header == list(RESULTS_HEADER):
                return path
            backup_corrupt_file(path, log)
            if log:
                log(f"Warning: {path.name} had an unexpected header; starting a fresh file.")
        atomic_write_text(path, ",".join(RESULTS_HEADER) + "\n")
    return path


def _read_header(path: Path) -> list[str] | None:
    try:
        with open(path, "r", encoding="utf-8", newline="") as f:
            return next(csv.reader(f), None)
    except (OSError, csv.Error, UnicodeDecodeError):
        return None


def append_rows(path: Path, rows: Sequence[dict[str, Any]]) -> None:
    if not rows:
        return
    with results_lock:
        with open(path, "a", encoding="utf-8", newline="") as f:
            writer = csv.DictWriter(f, fieldnames=RESULTS_HEADER)
            for row in rows:
                writer.writerow({key: "" if row.get(key) is None else row.get(key) for key in RESULTS_HEADER})
            f.flush()
            os.fsync(f.fileno())


def load_rows(path: Path) -> list[dict[str, str]]:
    with open(path, "r", encoding="utf-8", newline="") as f:
        return list(csv.DictReader(f))
