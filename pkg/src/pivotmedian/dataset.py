"""Loading, saving, summarizing, and synthesizing string datasets.

The file format is UTF-8 text with one string per line (newline-terminated),
characters drawn from the repertoire in :mod:`pivotmedian.distance`. Datasets
keep duplicates and line order: they are multisets, and selection algorithms
iterate them positionally.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, asdict
from pathlib import Path

from .distance import ALPHABET_CHARS, Seq, SymbolError, decode, encode


class DatasetParseError(ValueError):
    """A dataset file line could not be parsed; remembers the line number."""

    def __init__(self, line_number: int, message: str):
        super().__init__(f"line {line_number}: {message}")
        self.line_number = line_number


@dataclass
class Dataset:
    sequences: list[Seq]
    alphabet_size: int
    name: str = ""

    def __len__(self) -> int:
        return len(self.sequences)

    def __iter__(self):
        return iter(self.sequences)


def load_dataset(path: str | Path, alphabet_size: int,
                 allow_empty: bool = False, name: str | None = None) -> Dataset:
    """Read a dataset file, preserving order and duplicates.

    Blank lines are rejected unless ``allow_empty`` is set, in which case they
    become empty sequences. An empty file is always an error.
    """
    path = Path(path)
    text = path.read_text(encoding="utf-8")
    lines = text.splitlines()
    if not lines:
        raise ValueError(f"{path}: dataset file is empty")
    sequences: list[Seq] = []
    for lineno, line in enumerate(lines, start=1):
        if line == "" and not allow_empty:
            raise DatasetParseError(lineno, "blank line (use --allow-empty to accept)")
        try:
            sequences.append(encode(line, alphabet_size))
        except SymbolError as exc:
            raise DatasetParseError(lineno, str(exc)) from None
    return Dataset(sequences, alphabet_size, name=name if name is not None else path.stem)


def save_dataset(dataset: Dataset, path: str | Path) -> None:
    """Write one line per sequence; inverse of :func:`load_dataset`."""
    path = Path(path)
    with path.open("w", encoding="utf-8", newline="\n") as fh:
        for seq in dataset.sequences:
            fh.write(decode(seq))
            fh.write("\n")


@dataclass
class GeneratorConfig:
    """Settings for the clustered synthetic generator."""

    cluster_count: int
    per_cluster_size: int
    seed_length: int
    alphabet_size: int
    mutation_rate: float
    rng_seed: int

    def __post_init__(self) -> None:
        for attr in ("cluster_count", "per_cluster_size", "seed_length", "alphabet_size"):
            if getattr(self, attr) < 1:
                raise ValueError(f"{attr} must be a positive integer")
        if not 0.0 <= self.mutation_rate <= 1.0:
            raise ValueError("mutation_rate must lie in [0, 1]")


def generate_clustered(cfg: GeneratorConfig, name: str = "synthetic") -> Dataset:
    """Draw clustered random strings, deterministically per ``rng_seed``.

    Each cluster starts from a uniform random seed string. Every emitted copy
    mutates the seed independently: each position is substituted with
    probability ``mutation_rate`` (to a uniformly chosen *other* symbol), then
    with probability ``mutation_rate / 2`` each, one random insertion and one
    random deletion are applied.
    """
    rng = random.Random(cfg.rng_seed)
    sigma = cfg.alphabet_size
    sequences: list[Seq] = []
    for _ in range(cfg.cluster_count):
        seed = [rng.randrange(sigma) for _ in range(cfg.seed_length)]
        for _ in range(cfg.per_cluster_size):
            s = list(seed)
            if sigma > 1:
                for pos in range(len(s)):
                    if rng.random() < cfg.mutation_rate:
                        repl = rng.randrange(sigma - 1)
                        if repl >= s[pos]:
                            repl += 1
                        s[pos] = repl
            if rng.random() < cfg.mutation_rate / 2:
                s.insert(rng.randrange(len(s) + 1), rng.randrange(sigma))
            if rng.random() < cfg.mutation_rate / 2 and s:
                del s[rng.randrange(len(s))]
            sequences.append(tuple(s))
    return Dataset(sequences, sigma, name=name)


def write_generated(cfg: GeneratorConfig, path: str | Path,
                    name: str | None = None) -> Dataset:
    """Generate, write the dataset file plus a JSON metadata sidecar."""
    path = Path(path)
    dataset = generate_clustered(cfg, name=name if name is not None else path.stem)
    save_dataset(dataset, path)
    sidecar = path.with_name(path.name + ".meta.json")
    sidecar.write_text(json.dumps(asdict(cfg), indent=2) + "\n", encoding="utf-8")
    return dataset


#: Labels for the three equal-width average-length bins.
LENGTH_CATEGORIES = ("short", "medium", "large")


def length_summary(dataset: Dataset, corpus_min: float,
                   corpus_max: float) -> tuple[float, str]:
    """Mean sequence length and its equal-width length category.

    ``corpus_min``/``corpus_max`` span the average lengths observed over the
    corpus being binned; the three bins split that range with the top bin
    closed, i.e. [lo, lo+w), [lo+w, lo+2w), [lo+2w, hi].
    """
    if not dataset.sequences:
        raise ValueError("cannot summarize an empty dataset")
    if corpus_max < corpus_min:
        raise ValueError("corpus_max must be >= corpus_min")
    mean_len = sum(len(s) for s in dataset.sequences) / len(dataset.sequences)
    width = (corpus_max - corpus_min) / 3.0
    if mean_len < corpus_min + width:
        category = LENGTH_CATEGORIES[0]
    elif mean_len < corpus_min + 2 * width:
        category = LENGTH_CATEGORIES[1]
    else:
        category = LENGTH_CATEGORIES[2]
    return mean_len, category
