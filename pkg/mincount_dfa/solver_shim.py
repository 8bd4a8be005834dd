"""
Bridge from the solution-file contract to python-mip (CBC).

    python -m mincount_dfa.solver_shim MODEL.lp SOLUTION.sol [--max-seconds S]

Exit status 127 means python-mip is not installed.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .store import atomic_write_lines


def _status_name(mip, status) -> str:
    status_map = {
        mip.OptimizationStatus.OPTIMAL: "optimal",
        mip.OptimizationStatus.FEASIBLE: "feasible",
        mip.OptimizationStatus.INFEASIBLE: "infeasible",
        mip.OptimizationStatus.INT_INFEASIBLE: "infeasible",
    }
    return status_map.get(status, "unknown")


def solve_file(lp_path: Path, sol_path: Path, max_seconds: float | None = None) -> str:
    import mip  # type: ignore

    model = mip.Model(solver_name=mip.CBC)
    model.verbose = 0
    model.read(str(lp_path))
    if max_seconds is not None:
        status = model.optimize(max_seconds=max_seconds)
    else:
        status = model.optimize()
    name = _status_name(mip, status)

    def lines():
        yield f"STATUS {name}"
        if name in ("optimal", "feasible"):
            for var in model.vars:
                value = var.x
                if value is None:
                    continue
                rounded = round(value)
                # CBC reports integers with float noise
                yield f"{var.name} {rounded if abs(value - rounded) < 1e-6 else value}"

    atomic_write_lines(sol_path, lines())
    return name


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(prog="mincount_dfa.solver_shim", description="Solve an LP file with python-mip.")
    parser.add_argument("lp", type=Path)
    parser.add_argument("sol", type=Path)
    parser.add_argument("--max-seconds", type=float, default=None)
    args = parser.parse_args(argv)
    try:
        import mip  # type: ignore  # noqa: F401
    except ImportError:
        print("Error: python-mip not found. Install with: pip install mip", file=sys.stderr)
        return 127
    status = solve_file(args.lp, args.sol, args.max_seconds)
    print(f"status={status}", file=sys.stderr)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
