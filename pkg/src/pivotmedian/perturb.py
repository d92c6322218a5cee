"""Perturbation-based median refinement.

Greedy local search over single edit operations: each round scores every
substitution, deletion, and insertion applied to the current candidate and
keeps the best one if it strictly lowers the weighted cumulative distance.
The objective is a non-negative quantity that strictly decreases each round,
so the search always terminates at a single-edit local optimum.

This is the "greedy-full-scan" ranking strategy; alternative edit rankings
can be registered without touching the orchestration or the counters.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Callable, Sequence as PySequence

import numpy as np

from ._kernel import batch_objective, dist_padded, pack
from .distance import (
    CostModel,
    EditOperation,
    EvalCounter,
    Seq,
    delete,
    edit_distance,
    insert,
    substitute,
)
from .selection import PivotSet, max_distance_estimation, pivot_selection, set_median


@dataclass
class Objective:
    """Weighted cumulative distance target: Σ weights[j] · d(candidate, targets[j])."""

    targets: list[Seq]
    weights: list[int]
    cost_model: CostModel

    def __post_init__(self) -> None:
        if len(self.targets) != len(self.weights):
            raise ValueError("targets and weights must have equal length")
        if not self.targets:
            raise ValueError("objective needs at least one target")
        if any(w <= 0 for w in self.weights):
            raise ValueError("weights must be positive")
        for t in self.targets:
            self.cost_model.check_sequence(t)


@dataclass
class MedianResult:
    """Outcome of a median approximation run."""

    median: Seq
    objective_value: float
    mad: float | None
    distance_evals: int
    improvement_rounds: int
    phase_evals: dict[str, int] = field(default_factory=dict)
    pivot_set: PivotSet | None = None

    def to_json(self) -> dict:
        from .distance import decode  # local import keeps module deps one-way

        doc = {
            "median": decode(self.median),
            "median_length": len(self.median),
            "objective_value": self.objective_value,
            "mad": self.mad,
            "distance_evals": self.distance_evals,
            "improvement_rounds": self.improvement_rounds,
            "phase_evals": dict(self.phase_evals),
        }
        if self.pivot_set is not None:
            doc["pivot_count"] = len(self.pivot_set)
            doc["alpha"] = self.pivot_set.alpha
        return doc


def cumulative_cost(candidate: PySequence[int], objective: Objective,
                    counter: EvalCounter) -> float:
    """Weighted sum of distances from ``candidate`` to every target."""
    total = 0.0
    for target, weight in zip(objective.targets, objective.weights):
        total += weight * edit_distance(candidate, target, objective.cost_model, counter)
    return total


def enumerate_edits(candidate: PySequence[int], alphabet_size: int) -> list[EditOperation]:
    """All single edits of ``candidate``, in canonical order.

    Substitutions come first (position-major, symbol-minor, skipping the
    symbol already present), then deletions by position, then insertions
    (position-major including the end slot, symbol-minor). None of the
    generated edits reproduces the candidate itself.
    """
    ops: list[EditOperation] = []
    n = len(candidate)
    for pos in range(n):
        present = candidate[pos]
        for sym in range(alphabet_size):
            if sym != present:
                ops.append(substitute(pos, sym))
    for pos in range(n):
        ops.append(delete(pos))
    for pos in range(n + 1):
        for sym in range(alphabet_size):
            ops.append(insert(pos, sym))
    return ops


def _scan_edits(current: Seq, ops: list[EditOperation], objective: Objective,
                counter: EvalCounter) -> np.ndarray:
    """Objective value of every candidate edit; one counted evaluation per
    (candidate, target) pair, identical to calling :func:`cumulative_cost`
    on each edited string in turn."""
    candidates = [op.apply(current) for op in ops]
    cand_mat, cand_lens = pack(candidates)
    target_mat, target_lens = pack(objective.targets)
    weights = np.asarray(objective.weights, dtype=np.float64)
    counter.add(len(candidates) * len(objective.targets))
    return batch_objective(
        cand_mat, cand_lens, target_mat, target_lens, weights,
        objective.cost_model.substitution_matrix, objective.cost_model.indel,
    )


#: A ranking strategy performs one improvement step: given the current
#: candidate and its objective value, return ``(better, cost)`` or ``None``
#: when no acceptable edit exists. All evaluations must go through the
#: counter.
RankingStrategy = Callable[[Seq, float, Objective, EvalCounter],
                           "tuple[Seq, float] | None"]

_STRATEGIES: dict[str, RankingStrategy] = {}


def register_strategy(name: str, strategy: RankingStrategy) -> None:
    _STRATEGIES[name] = strategy


def _greedy_full_scan(current: Seq, current_cost: float, objective: Objective,
                      counter: EvalCounter) -> tuple[Seq, float] | None:
    ops = enumerate_edits(current, objective.cost_model.alphabet_size)
    costs = _scan_edits(current, ops, objective, counter)
    best = int(np.argmin(costs))
    if costs[best] < current_cost:
        return ops[best].apply(current), float(costs[best])
    return None


register_strategy("greedy-full-scan", _greedy_full_scan)


def refine(start: PySequence[int], objective: Objective, counter: EvalCounter,
           max_rounds: int = 0, strategy: str = "greedy-full-scan") -> MedianResult:
    """Single-edit descent from ``start`` to a local optimum.

    The default strategy evaluates the full canonical edit neighbourhood each
    round and applies the best strictly improving edit; ties between equally
    good edits fall to the earliest in enumeration order. ``max_rounds`` of 0
    means unlimited; the strict-improvement rule alone guarantees
    termination. The returned ``mad`` is unset, and ``distance_evals`` covers
    only this call.
    """
    model = objective.cost_model
    model.check_sequence(start)
    if max_rounds < 0:
        raise ValueError("max_rounds must be >= 0")
    try:
        step = _STRATEGIES[strategy]
    except KeyError:
        raise ValueError(f"unknown ranking strategy {strategy!r}") from None
    evals_before = counter.count
    current: Seq = tuple(start)
    current_cost = cumulative_cost(current, objective, counter)
    rounds = 0
    while not (max_rounds and rounds >= max_rounds):
        improved = step(current, current_cost, objective, counter)
        if improved is None:
            break
        current, current_cost = improved
        rounds += 1
    return MedianResult(
        median=current,
        objective_value=current_cost,
        mad=None,
        distance_evals=counter.count - evals_before,
        improvement_rounds=rounds,
    )


def _full_set_mean_distance(median: Seq, dataset, model: CostModel,
                            counter: EvalCounter) -> float:
    total = 0.0
    mat, lens = pack(dataset.sequences)
    arr = np.ascontiguousarray(np.asarray(median, dtype=np.int64))
    for i in range(len(lens)):
        total += dist_padded(arr, len(arr), mat[i], lens[i],
                             model.substitution_matrix, model.indel)
        counter.add()
    return total / len(lens)


def approximate_median(dataset, model: CostModel, alpha: float | None = None,
                       counter: EvalCounter | None = None, *,
                       weighted_pivots: bool = True, dedupe_median: bool = False,
                       count_mad: bool = False, max_rounds: int = 0,
                       strategy: str = "greedy-full-scan") -> MedianResult:
    """Approximate the median string of a dataset.

    With ``alpha=None`` the refinement objective spans the whole dataset with
    unit weights (full mode). Otherwise the working set is first shrunk:
    estimate the diameter, select sparse pivots at separation
    ``alpha * max_dist``, and refine against the pivots weighted by how many
    members each one absorbed (or unweighted if ``weighted_pivots`` is off).
    Both modes start from the set median, and the reported ``mad`` is always
    the mean distance over the *full* dataset. The final MAD evaluation is
    excluded from ``distance_evals`` unless ``count_mad`` is set.
    """
    if len(dataset.sequences) == 0:
        raise ValueError("dataset must contain at least one sequence")
    c = counter if counter is not None else EvalCounter()
    evals_before = c.count
    phases: dict[str, int] = {}

    mark = c.count
    median_index = set_median(dataset, model, c)
    phases["set_median"] = c.count - mark
    start = dataset.sequences[median_index]

    pivot_set = None
    if alpha is None:
        targets = list(dataset.sequences)
        weights = [1] * len(targets)
    else:
        mark = c.count
        max_dist = max_distance_estimation(dataset, model, c)
        phases["max_distance"] = c.count - mark
        mark = c.count
        pivot_set = pivot_selection(dataset, alpha, max_dist, median_index,
                                    model, c, dedupe_median=dedupe_median)
        phases["pivot_selection"] = c.count - mark
        targets = list(pivot_set.pivots)
        weights = list(pivot_set.weights) if weighted_pivots else [1] * len(targets)

    objective = Objective(targets, weights, model)
    mark = c.count
    result = refine(start, objective, c, max_rounds=max_rounds, strategy=strategy)
    phases["refine"] = c.count - mark

    mad_counter = EvalCounter()
    mad_value = _full_set_mean_distance(result.median, dataset, model, mad_counter)
    if count_mad:
        c.add(mad_counter.count)
        phases["mad"] = mad_counter.count

    return replace(
        result,
        mad=mad_value,
        distance_evals=c.count - evals_before,
        phase_evals=phases,
        pivot_set=pivot_set,
    )
