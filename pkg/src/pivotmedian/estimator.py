"""Scikit-learn style front end for the median string approximation."""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.exceptions import NotFittedError

from .dataset import Dataset
from .distance import CostModel, EvalCounter, decode, edit_distance, load_cost_model
from .perturb import approximate_median
from .validation import as_sequences, check_alpha, infer_alphabet_size


class MedianStringApproximator(BaseEstimator, TransformerMixin):
    """Learn an approximate median string of a collection of sequences.

    The estimator finds the set median, optionally shrinks the working set to
    sparse pivots separated by ``alpha`` times the estimated diameter, and
    then descends through single-edit perturbations until no edit lowers the
    weighted cumulative distance.

    Parameters
    ----------
    alpha : float or None, default=None
        Pivot separation threshold as a fraction of the estimated diameter.
        None refines against the full collection (the reference behaviour).
    cost_model : str or CostModel, default="freeman"
        "freeman" (8-direction chain codes, 45-degree substitution units,
        indel 2), "unit" (classic Levenshtein), a path to a JSON cost file,
        or a prebuilt :class:`CostModel`.
    alphabet_size : int or None, default=None
        Required for "unit" when it cannot be inferred from the input.
    weighted_pivots : bool, default=True
        Weight each pivot by the number of members it absorbed.
    dedupe_median : bool, default=False
        Skip the set median's own occurrence during pivot selection.
    count_mad : bool, default=False
        Include the final full-set MAD evaluation in the operation count.
    max_rounds : int, default=0
        Cap on improvement rounds; 0 means run to a local optimum.

    Attributes
    ----------
    median_ : tuple of int
        The approximate median as symbol codes.
    median_string_ : str
        Text form of the median.
    objective_value_ : float
        Final weighted cumulative distance over the refinement targets.
    mad_ : float
        Mean distance from the median to every fitted sequence.
    n_distance_evals_ : int
        Edit distances computed during fit, across all phases.
    n_improvement_rounds_ : int
        Accepted edits before reaching the local optimum.
    pivot_set_ : PivotSet or None
        The pivots used for refinement (None in full mode).

    Examples
    --------
    >>> est = MedianStringApproximator(cost_model="unit")
    >>> est.fit(["ab", "ab", "b"]).median_string_
    'ab'
    """

    def __init__(self, alpha=None, cost_model="freeman", alphabet_size=None,
                 weighted_pivots=True, dedupe_median=False, count_mad=False,
                 max_rounds=0):
        self.alpha = alpha
        self.cost_model = cost_model
        self.alphabet_size = alphabet_size
        self.weighted_pivots = weighted_pivots
        self.dedupe_median = dedupe_median
        self.count_mad = count_mad
        self.max_rounds = max_rounds

    def _resolve(self, X) -> tuple[CostModel, list]:
        X = list(X)
        if isinstance(self.cost_model, CostModel):
            model = self.cost_model
        else:
            size = self.alphabet_size
            if size is None and self.cost_model == "unit":
                size = infer_alphabet_size(X)
            model = load_cost_model(self.cost_model, size)
        if self.alphabet_size is not None and model.alphabet_size != self.alphabet_size:
            raise ValueError(
                f"alphabet_size={self.alphabet_size} conflicts with the "
                f"{model.name!r} model's alphabet of {model.alphabet_size}"
            )
        return model, as_sequences(X, model.alphabet_size)

    def fit(self, X, y=None):
        """Approximate the median of ``X`` (iterable of str or of int codes)."""
        check_alpha(self.alpha)
        model, seqs = self._resolve(X)
        counter = EvalCounter()
        result = approximate_median(
            Dataset(seqs, model.alphabet_size, name="fit"),
            model,
            self.alpha,
            counter,
            weighted_pivots=self.weighted_pivots,
            dedupe_median=self.dedupe_median,
            count_mad=self.count_mad,
            max_rounds=self.max_rounds,
        )
        self.cost_model_ = model
        self.result_ = result
        self.median_ = result.median
        self.median_string_ = decode(result.median)
        self.objective_value_ = result.objective_value
        self.mad_ = result.mad
        self.n_distance_evals_ = result.distance_evals
        self.n_improvement_rounds_ = result.improvement_rounds
        self.pivot_set_ = result.pivot_set
        return self

    def transform(self, X) -> np.ndarray:
        """Distance from each sequence in ``X`` to the fitted median, (n, 1)."""
        if not hasattr(self, "median_"):
            raise NotFittedError("fit the estimator before calling transform")
        seqs = as_sequences(list(X), self.cost_model_.alphabet_size)
        scratch = EvalCounter()
        out = np.empty((len(seqs), 1), np.float64)
        for i, seq in enumerate(seqs):
            out[i, 0] = edit_distance(self.median_, seq, self.cost_model_, scratch)
        return out

    def score(self, X, y=None) -> float:
        """Negative mean distance to the fitted median (higher is better)."""
        return -float(self.transform(X).mean())
