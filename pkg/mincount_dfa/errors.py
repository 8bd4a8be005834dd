"""
Error hierarchy.

Every error raised on purpose by the package derives from `MinCountError`
and carries the process exit code the CLI should use for it.
"""

from __future__ import annotations


class MinCountError(Exception):
    exit_code = 1


class ParseError(MinCountError):
    """Malformed input file. `line` is 1-based when known."""

    exit_code = 2

    def __init__(self, message: str, *, line: int | None = None, source: str | None = None):
        self.line = line
        self.source = source
        where = ""
        if source:
            where = f"{source}:"
        if line is not None:
            where = f"{where}{line}:"
        super().__init__(f"{where} {message}".strip() if where else message)


class InvalidWordError(MinCountError, ValueError):
    exit_code = 2


class InvalidDfaError(MinCountError, ValueError):
    exit_code = 2


class AlphabetMismatchError(MinCountError, ValueError):
    exit_code = 2


class InvalidConfigError(MinCountError, ValueError):
    exit_code = 2


class GuardExceededError(MinCountError):
    exit_code = 3


class SolverUnavailableError(MinCountError):
    exit_code = 4


class SolverProtocolError(MinCountError):
    pass


class InvalidAssignmentError(MinCountError):
    def __init__(self, message: str, *, constraint: str | None = None):
        self.constraint = constraint
        super().__init__(message)


class ModelNameCollisionError(MinCountError):
    pass


class InvalidValuationError(MinCountError, ValueError):
    pass


class UnsupportedAlphabetError(MinCountError, ValueError):
    pass


class UndefinedCorrelationError(MinCountError, ValueError):
    pass


class TimeLimitExceeded(MinCountError):
    pass
