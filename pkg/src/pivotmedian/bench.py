"""Experiment driver: alpha sweeps, MAD, operation counts, CSV reports.

Each sweep row runs with a fresh evaluation counter, so its operation count
is exactly the work of that run. Operation counts are raw; any scaling for
human-readable summaries happens at presentation time, never in the CSV.
"""

from __future__ import annotations

import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from pathlib import Path
from typing import IO

from .distance import CostModel, EvalCounter, edit_distance
from .perturb import approximate_median


def mad(median, dataset, model: CostModel, counter: EvalCounter) -> float:
    """Mean distance from ``median`` to every string of the full dataset."""
    if len(dataset.sequences) == 0:
        raise ValueError("dataset must contain at least one sequence")
    total = 0.0
    for seq in dataset.sequences:
        total += edit_distance(median, seq, model, counter)
    return total / len(dataset.sequences)


@dataclass
class SweepConfig:
    """Alpha grid bounds plus whether to run the full-set reference."""

    alpha_start: float = 0.30
    alpha_end: float = 0.02
    alpha_step: float = 0.005
    include_reference: bool = True

    def __post_init__(self) -> None:
        if self.alpha_step <= 0:
            raise ValueError("alpha_step must be > 0")


def alpha_grid(cfg: SweepConfig) -> list[float]:
    """Arithmetic grid from start toward end, both inclusive.

    Values are rounded to 3 decimals so repeated stepping cannot drift; the
    end point is included when it lands within half a step of the grid.
    """
    if cfg.alpha_step <= 0:
        raise ValueError("alpha_step must be > 0")
    direction = 1.0 if cfg.alpha_end >= cfg.alpha_start else -1.0
    span = abs(cfg.alpha_end - cfg.alpha_start)
    count = int(span / cfg.alpha_step + 0.5)
    grid = [round(cfg.alpha_start + direction * i * cfg.alpha_step, 3)
            for i in range(count + 1)]
    return grid


@dataclass
class ExperimentRecord:
    """One report row; ``alpha`` is None for the full-set reference run."""

    dataset_name: str
    alpha: float | None
    pivot_count: int | None
    pivot_pct: float | None
    distance_evals: int
    mad: float
    median_length: int
    wall_ms: float


def _run_one(dataset, model, alpha, **kwargs) -> ExperimentRecord:
    counter = EvalCounter()
    started = time.perf_counter()
    result = approximate_median(dataset, model, alpha, counter, **kwargs)
    wall_ms = (time.perf_counter() - started) * 1000.0
    if result.pivot_set is None:
        pivot_count = pivot_pct = None
    else:
        pivot_count = len(result.pivot_set)
        pivot_pct = 100.0 * pivot_count / len(dataset.sequences)
    return ExperimentRecord(
        dataset_name=dataset.name,
        alpha=alpha,
        pivot_count=pivot_count,
        pivot_pct=pivot_pct,
        distance_evals=result.distance_evals,
        mad=result.mad,
        median_length=len(result.median),
        wall_ms=wall_ms,
    )


def run_sweep(dataset, model: CostModel, cfg: SweepConfig, *,
              weighted_pivots: bool = True, dedupe_median: bool = False,
              count_mad: bool = False, threads: int = 1) -> list[ExperimentRecord]:
    """One record per grid alpha, preceded by the reference run if enabled.

    Runs are independent, so ``threads`` > 1 may execute them concurrently;
    the records come back in grid order either way.
    """
    if len(dataset.sequences) == 0:
        raise ValueError("dataset must contain at least one sequence")
    if threads < 1:
        raise ValueError("threads must be >= 1")
    kwargs = dict(weighted_pivots=weighted_pivots, dedupe_median=dedupe_median,
                  count_mad=count_mad)
    alphas: list[float | None] = list(alpha_grid(cfg))
    if cfg.include_reference:
        alphas.insert(0, None)
    if threads == 1:
        return [_run_one(dataset, model, a, **kwargs) for a in alphas]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        futures = [pool.submit(_run_one, dataset, model, a, **kwargs) for a in alphas]
        return [f.result() for f in futures]


CSV_HEADER = "dataset,alpha,pivot_count,pivot_pct,distance_evals,mad,median_length,wall_ms"


def format_record(record: ExperimentRecord) -> str:
    alpha = "ref" if record.alpha is None else f"{record.alpha:.3f}"
    pivot_count = "" if record.pivot_count is None else str(record.pivot_count)
    pivot_pct = "" if record.pivot_pct is None else f"{record.pivot_pct:.2f}"
    return (f"{record.dataset_name},{alpha},{pivot_count},{pivot_pct},"
            f"{record.distance_evals},{record.mad:.4f},{record.median_length},"
            f"{record.wall_ms:.3f}")


def write_csv(records: list[ExperimentRecord], out: str | Path | IO[str]) -> None:
    """Emit the report with a header line, UTF-8, LF line endings."""
    lines = [CSV_HEADER] + [format_record(r) for r in records]
    text = "\n".join(lines) + "\n"
    if hasattr(out, "write"):
        out.write(text)
    else:
        Path(out).write_text(text, encoding="utf-8", newline="\n")
