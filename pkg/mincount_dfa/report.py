"""Post-bench report generation and display."""

from __future__ import annotations

from collections.abc import Callable, Sequence
from datetime import datetime
from pathlib import Path
from statistics import mean
from typing import Any

from .bench import ALGORITHMS, STATUSES, BenchRecord, pearson
from .errors import UndefinedCorrelationError
from .store import save_json


def _algorithm_summary(records: Sequence[BenchRecord]) -> dict[str, Any]:
    ok = [r for r in records if r.status == "ok" and r.final_score is not None]
    scores = [r.final_score for r in ok]
    times = [r.ms for r in ok]
    correlation: float | None = None
    if len(ok) >= 2:
        try:
            correlation = round(pearson(scores, times), 4)
        except UndefinedCorrelationError:
            correlation = None
    return {
        "runs": len(records),
        "ok": len(ok),
        "mean_final_score": round(mean(scores), 3) if scores else None,
        "min_final_score": min(scores) if scores else None,
        "max_final_score": max(scores) if scores else None,
        "mean_ms": round(mean(times), 3) if times else None,
        "pearson_score_ms": correlation,
    }


def generate_report(
    records: Sequence[BenchRecord],
    start_time: float,
    end_time: float,
    results_path: Path | None = None,
) -> dict[str, Any]:
    totals: dict[str, int] = {"records": len(records)}
    for status in STATUSES:
        totals[status] = sum(1 for r in records if r.status == status)

    seen = [a for a in ALGORITHMS if any(r.algo == a for r in records)]
    per_algorithm = {algo: _algorithm_summary([r for r in records if r.algo == algo]) for algo in seen}

    problems = [
        f"{r.algo} seed={r.seed}: {r.status}"
        for r in records
        if r.status != "ok"
    ]
    return {
        "timestamp": datetime.now().isoformat(),
        "duration_seconds": round(end_time - start_time, 2),
        "results_file": str(Path(results_path).absolute()) if results_path else None,
        "instances": sorted({r.instance for r in records}),
        "totals": totals,
        "algorithms": per_algorithm,
        "problems": problems[:10],
        "problem_count": len(problems),
    }


def save_report(report: dict[str, Any], output_dir: Path) -> Path:
    timestamp = datetime.now().strftime("%Y%m%d_%H%M%S")
    report_file = Path(output_dir) / f"bench_report_{timestamp}.json"
    save_json(report, report_file)
    return report_file


def format_ms(ms: float | None) -> str:
    if ms is None:
        return "--"
    if ms < 1000:
        return f"{ms:.1f} ms"
    if ms < 60_000:
        return f"{ms / 1000:.2f} s"
    return f"{ms / 60_000:.1f} min"


def print_report_summary(report: dict[str, Any], out: Callable[[str], None] = print) -> None:
    out("\n" + "=" * 60)
    out("BENCH REPORT")
    out("=" * 60)

    totals = report["totals"]
    out(f"Duration: {report['duration_seconds']:.1f} seconds")
    if report.get("results_file"):
        out(f"Results: {report['results_file']}")
    out(f"\nRuns: {totals['ok']}/{totals['records']} ok")
    for status in STATUSES:
        if status != "ok" and totals.get(status):
            out(f"{status.replace('_', ' ').capitalize()}: {totals[status]}")

    for algo, summary in report["algorithms"].items():
        out(f"\n{algo}: {summary['ok']}/{summary['runs']} ok")
        if summary["ok"]:
            out(
                f"  score mean {summary['mean_final_score']} "
                f"(min {summary['min_final_score']}, max {summary['max_final_score']})"
            )
            out(f"  mean time {format_ms(summary['mean_ms'])}")
        if summary["pearson_score_ms"] is not None:
            out(f"  Pearson(score, time): {summary['pearson_score_ms']:+.3f}")

    if report["problems"]:
        out(f"\nProblems ({report['problem_count']}):")
        for problem in report["problems"]:
            out(f"  {problem}")
        if report["problem_count"] > len(report["problems"]):
            out(f"  ... and {report['problem_count'] - len(report['problems'])} more")

    out("=" * 60)
