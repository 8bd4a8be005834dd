"""
Dependency checks and feature availability.

- numpy is required (seedable RNG, correlation); we exit with a clear message if it's missing.
- python-mip is optional: it enables the default solver bridge
  (`python -m mincount_dfa.solver_shim {lp} {sol}`) when no solver command is configured.

Any other ILP solver can be plugged in through --solver-cmd or the
MINCOUNT_SOLVER_CMD environment variable, as long as it honours the
solution-file contract.
"""

from __future__ import annotations

import os
import shlex
import sys

from .defaults import SOLVER_ENV_VAR

try:
    import numpy  # type: ignore  # noqa: F401
except ImportError:
    print("Error: numpy library not found!", file=sys.stderr)
    print("Please install it with: pip install -r requirements.txt", file=sys.stderr)
    sys.exit(1)

try:
    import mip  # type: ignore
except ImportError:
    mip = None  # type: ignore[assignment]

mip_available = mip is not None


def bridge_command() -> str:
    return f"{shlex.quote(sys.executable)} -m mincount_dfa.solver_shim {{lp}} {{sol}}"


def resolve_solver_command(explicit: str | None = None) -> str | None:
    """CLI flag, then the environment, then the python-mip bridge. None when nothing is usable."""
    if explicit:
        return explicit
    from_env = os.environ.get(SOLVER_ENV_VAR, "").strip()
    if from_env:
        return from_env
    if mip_available:
        return bridge_command()
    return None
