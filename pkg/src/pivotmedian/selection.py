"""Set median, diameter estimation, and sparse pivot selection.

All three operations charge every edit-distance computation to the shared
:class:`~pivotmedian.distance.EvalCounter`, so their work shows up in the
same budget as the refinement phase that follows them.
"""

from __future__ import annotations

from dataclasses import dataclass

from ._kernel import dist_padded, pack
from .distance import CostModel, EvalCounter, Seq, decode


@dataclass
class PivotSet:
    """Selected pivots with their absorbed-member weights.

    ``pivots[0]`` is always the set median with an initial weight of 1; the
    weights then gain exactly one unit per dataset element, so they sum to
    ``len(dataset) + 1`` (the median's own occurrence is re-processed unless
    selection ran with ``dedupe_median``).
    """

    pivots: list[Seq]
    weights: list[int]
    alpha: float
    max_dist: float
    median_index: int

    def __post_init__(self) -> None:
        if len(self.pivots) != len(self.weights):
            raise ValueError("pivots and weights must have equal length")

    def __len__(self) -> int:
        return len(self.pivots)

    def to_json(self) -> dict:
        """JSON-ready form for experiment audit trails."""
        return {
            "pivots": [decode(p) for p in self.pivots],
            "weights": list(self.weights),
            "alpha": self.alpha,
            "max_dist": self.max_dist,
            "median_index": self.median_index,
        }


def _require_nonempty(dataset) -> None:
    if len(dataset.sequences) == 0:
        raise ValueError("dataset must contain at least one sequence")


def set_median(dataset, model: CostModel, counter: EvalCounter) -> int:
    """Index of a dataset element minimizing the cumulative distance to the rest.

    Symmetry is exploited: each unordered pair is evaluated exactly once,
    |S|(|S|-1)/2 counted computations. Ties go to the lowest index.
    """
    _require_nonempty(dataset)
    for seq in dataset.sequences:
        model.check_sequence(seq)
    mat, lens = pack(dataset.sequences)
    sub, indel = model.substitution_matrix, model.indel
    n = len(lens)
    sums = [0.0] * n
    for i in range(n):
        for j in range(i + 1, n):
            d = dist_padded(mat[i], lens[i], mat[j], lens[j], sub, indel)
            counter.add()
            sums[i] += d
            sums[j] += d
    best = 0
    for i in range(1, n):
        if sums[i] < sums[best]:
            best = i
    return best


def max_distance_estimation(dataset, model: CostModel, counter: EvalCounter) -> float:
    """Diameter estimate by repeated farthest-point scans.

    Starting from index 0, scan every element against the current anchor and
    hop to the strictly farthest element seen so far; stop once the anchor no
    longer moves. The result is within a factor two of the true diameter.
    """
    _require_nonempty(dataset)
    for seq in dataset.sequences:
        model.check_sequence(seq)
    mat, lens = pack(dataset.sequences)
    sub, indel = model.substitution_matrix, model.indel
    n = len(lens)
    current = 0
    former = -1
    max_position = 0
    max_dist = float("-inf")
    while current != former:
        for i in range(n):
            d = dist_padded(mat[i], lens[i], mat[current], lens[current], sub, indel)
            counter.add()
            if d > max_dist:
                max_dist = d
                max_position = i
        former = current
        current = max_position
    return max_dist


def pivot_selection(dataset, alpha: float, max_dist: float, median_index: int,
                    model: CostModel, counter: EvalCounter,
                    dedupe_median: bool = False) -> PivotSet:
    """Greedy sparse pivot selection seeded with the set median.

    Scanning the dataset in order, an element whose distance to every current
    pivot reaches ``alpha * max_dist`` becomes a new pivot with weight 1;
    otherwise the nearest pivot below that threshold absorbs it (first pivot
    wins distance ties). The comparison is strict, so an element at exactly
    the threshold is promoted. With ``dedupe_median`` the median's own source
    index is skipped instead of re-processed.
    """
    _require_nonempty(dataset)
    if not 0.0 <= alpha <= 1.0:
        raise ValueError("alpha must lie in [0, 1]")
    if max_dist < 0:
        raise ValueError("max_dist must be non-negative")
    seqs = dataset.sequences
    if not 0 <= median_index < len(seqs):
        raise ValueError("median_index out of range")
    for seq in seqs:
        model.check_sequence(seq)
    mat, lens = pack(seqs)
    sub, indel = model.substitution_matrix, model.indel
    threshold = max_dist * alpha

    pivots: list[Seq] = [seqs[median_index]]
    weights: list[int] = [1]
    pivot_rows = [(mat[median_index], lens[median_index])]
    for i in range(len(seqs)):
        if dedupe_median and i == median_index:
            continue
        possible = True
        min_space = float("inf")
        pivot_index = 0
        for j, (row, rlen) in enumerate(pivot_rows):
            space = dist_padded(row, rlen, mat[i], lens[i], sub, indel)
            counter.add()
            if space < threshold:
                possible = False
                if space < min_space:
                    min_space = space
                    pivot_index = j
        if possible:
            pivots.append(seqs[i])
            weights.append(1)
            pivot_rows.append((mat[i], lens[i]))
        else:
            weights[pivot_index] += 1
    return PivotSet(pivots, weights, alpha, max_dist, median_index)
