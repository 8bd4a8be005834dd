"""Cooperative wall-clock deadlines for the search loops."""

from __future__ import annotations

import time

from .errors import TimeLimitExceeded


class Deadline:
    def __init__(self, timeout_ms: int | None = None):
        if timeout_ms is not None and timeout_ms < 0:
            raise ValueError("timeout_ms must be non-negative")
        self.timeout_ms = timeout_ms
        self._start = time.monotonic()
        self._end = None if timeout_ms is None else self._start + timeout_ms / 1000.0

    @classmethod
    def unlimited(cls) -> "Deadline":
        return cls(None)

    def expired(self) -> bool:
        return self._end is not None and time.monotonic() >= self._end

    def remaining_seconds(self) -> float | None:
        if self._end is None:
            return None
        return max(self._end - time.monotonic(), 0.0)

    def elapsed_ms(self) -> float:
        return (time.monotonic() - self._start) * 1000.0

    def check(self) -> None:
        if self.expired():
            raise TimeLimitExceeded(f"time limit of {self.timeout_ms} ms exceeded")


def ensure_deadline(deadline: Deadline | None) -> Deadline:
    return deadline if deadline is not None else Deadline.unlimited()
