"""Approximate median strings under weighted edit distance.

The pipeline: find the set median, estimate the set's diameter by
farthest-point scanning, select sparse pivots separated by a fraction of
that diameter, and refine the median through single-edit perturbations
against the (weighted) pivots instead of the whole set. A benchmark
harness sweeps the separation fraction and reports operation counts and
mean distance to the median.
"""

from .bench import (
    CSV_HEADER,
    ExperimentRecord,
    SweepConfig,
    alpha_grid,
    mad,
    run_sweep,
    write_csv,
)
from .dataset import (
    Dataset,
    DatasetParseError,
    GeneratorConfig,
    generate_clustered,
    length_summary,
    load_dataset,
    save_dataset,
    write_generated,
)
from .distance import (
    ALPHABET_CHARS,
    CostModel,
    EditOperation,
    EvalCounter,
    SymbolError,
    cost_model_from_json,
    decode,
    delete,
    edit_distance,
    edit_script,
    encode,
    freeman_cost_model,
    insert,
    load_cost_model,
    substitute,
    unit_cost_model,
)
from .estimator import MedianStringApproximator
from .perturb import (
    MedianResult,
    Objective,
    approximate_median,
    cumulative_cost,
    enumerate_edits,
    refine,
    register_strategy,
)
from .selection import (
    PivotSet,
    max_distance_estimation,
    pivot_selection,
    set_median,
)

__version__ = "0.1.0"

__all__ = [
    "ALPHABET_CHARS",
    "CSV_HEADER",
    "CostModel",
    "Dataset",
    "DatasetParseError",
    "EditOperation",
    "EvalCounter",
    "ExperimentRecord",
    "GeneratorConfig",
    "MedianResult",
    "MedianStringApproximator",
    "Objective",
    "PivotSet",
    "SweepConfig",
    "SymbolError",
    "alpha_grid",
    "approximate_median",
    "cost_model_from_json",
    "cumulative_cost",
    "decode",
    "delete",
    "edit_distance",
    "edit_script",
    "encode",
    "enumerate_edits",
    "freeman_cost_model",
    "generate_clustered",
    "insert",
    "length_summary",
    "load_cost_model",
    "load_dataset",
    "mad",
    "max_distance_estimation",
    "pivot_selection",
    "refine",
    "register_strategy",
    "run_sweep",
    "save_dataset",
    "set_median",
    "substitute",
    "unit_cost_model",
    "write_csv",
    "write_generated",
    "__version__",
]
