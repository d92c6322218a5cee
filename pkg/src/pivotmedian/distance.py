"""Edit distance with configurable symbol costs, plus evaluation counting.

Sequences are tuples of int codes in ``range(alphabet_size)``. Text datasets
map characters onto codes through :data:`ALPHABET_CHARS` (digits first, then
lowercase letters), so Freeman chain codes '0'-'7' become 0-7.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Sequence as PySequence

import numpy as np

from ._kernel import dist_padded

#: Character repertoire for text datasets; code = index in this string.
ALPHABET_CHARS = "0123456789abcdefghijklmnopqrstuvwxyz"

Seq = tuple[int, ...]


class SymbolError(ValueError):
    """A symbol code falls outside the declared alphabet."""


def encode(text: str, alphabet_size: int) -> Seq:
    """Map a text line to a code tuple, validating against the alphabet."""
    codes = []
    for ch in text:
        code = ALPHABET_CHARS.find(ch)
        if code < 0 or code >= alphabet_size:
            raise SymbolError(
                f"character {ch!r} is not valid for alphabet size {alphabet_size}"
            )
        codes.append(code)
    return tuple(codes)


def decode(seq: Iterable[int]) -> str:
    """Inverse of :func:`encode` for alphabets up to 36 symbols."""
    out = []
    for code in seq:
        if not 0 <= code < len(ALPHABET_CHARS):
            raise SymbolError(f"code {code} has no character form")
        out.append(ALPHABET_CHARS[code])
    return "".join(out)


@dataclass(eq=False)
class CostModel:
    """Symbol substitution costs plus a flat insertion/deletion cost.

    The substitution matrix must be symmetric with a zero diagonal, and no
    entry may exceed twice the indel cost; otherwise a substitution would
    never be optimal and the induced sequence distance could break the
    triangle inequality the model intends to provide.
    """

    alphabet_size: int
    substitution_matrix: np.ndarray
    indel: float
    name: str = "custom"

    def __post_init__(self) -> None:
        if self.alphabet_size < 1:
            raise ValueError("alphabet_size must be >= 1")
        mat = np.ascontiguousarray(np.asarray(self.substitution_matrix, dtype=np.float64))
        if mat.shape != (self.alphabet_size, self.alphabet_size):
            raise ValueError(
                f"substitution matrix must be {self.alphabet_size}x{self.alphabet_size}"
            )
        if np.any(mat < 0) or self.indel < 0:
            raise ValueError("costs must be non-negative")
        if np.any(np.diag(mat) != 0):
            raise ValueError("substitution(a, a) must be 0")
        if not np.array_equal(mat, mat.T):
            raise ValueError("substitution costs must be symmetric")
        if np.any(mat > 2 * self.indel):
            raise ValueError("substitution cost may not exceed 2 * indel")
        self.substitution_matrix = mat
        self.indel = float(self.indel)

    def substitution(self, a: int, b: int) -> float:
        self.check_symbol(a)
        self.check_symbol(b)
        return float(self.substitution_matrix[a, b])

    def check_symbol(self, code: int) -> None:
        if not 0 <= code < self.alphabet_size:
            raise SymbolError(
                f"symbol {code} out of range for alphabet size {self.alphabet_size}"
            )

    def check_sequence(self, seq: PySequence[int]) -> None:
        for code in seq:
            self.check_symbol(code)


def freeman_cost_model() -> CostModel:
    """8-direction chain-code costs: one unit per 45 degrees, indel of two."""
    mat = np.empty((8, 8), np.float64)
    for a in range(8):
        for b in range(8):
            diff = abs(a - b)
            mat[a, b] = min(diff, 8 - diff)
    return CostModel(8, mat, 2.0, name="freeman")


def unit_cost_model(alphabet_size: int) -> CostModel:
    """Classic Levenshtein: every operation costs one unit."""
    if alphabet_size < 1:
        raise ValueError("alphabet_size must be >= 1")
    mat = np.ones((alphabet_size, alphabet_size), np.float64)
    np.fill_diagonal(mat, 0.0)
    return CostModel(alphabet_size, mat, 1.0, name="unit")


def cost_model_from_json(doc: str | dict) -> CostModel:
    """Build a cost model from a JSON document.

    Either ``{"name": "freeman"}`` / ``{"name": "unit", "alphabet_size": n}``
    for the built-ins, or the full form
    ``{"alphabet_size": n, "indel": k, "substitution": [[n x n matrix]]}``.
    """
    if isinstance(doc, str):
        doc = json.loads(doc)
    if not isinstance(doc, dict):
        raise ValueError("cost model document must be a JSON object")
    if "name" in doc:
        return _builtin_model(doc["name"], doc.get("alphabet_size"))
    try:
        size = int(doc["alphabet_size"])
        indel = float(doc["indel"])
        matrix = doc["substitution"]
    except KeyError as exc:
        raise ValueError(f"cost model document missing field {exc}") from None
    return CostModel(size, np.asarray(matrix, dtype=np.float64), indel)


def _builtin_model(name: str, alphabet_size: int | None) -> CostModel:
    if name == "freeman":
        return freeman_cost_model()
    if name == "unit":
        return unit_cost_model(alphabet_size if alphabet_size else 8)
    raise ValueError(f"unknown cost model name {name!r}")


def load_cost_model(spec: str, alphabet_size: int | None = None) -> CostModel:
    """Resolve a cost model from a built-in name or a JSON file path."""
    if spec in ("freeman", "unit"):
        return _builtin_model(spec, alphabet_size)
    return cost_model_from_json(Path(spec).read_text(encoding="utf-8"))


@dataclass
class EvalCounter:
    """Counts full edit-distance computations across all algorithm phases."""

    count: int = 0

    def add(self, n: int = 1) -> None:
        self.count += n

    def reset(self) -> None:
        self.count = 0


def as_codes(seq: PySequence[int]) -> np.ndarray:
    return np.ascontiguousarray(np.asarray(seq, dtype=np.int64))


def edit_distance(a: PySequence[int], b: PySequence[int], model: CostModel,
                  counter: EvalCounter) -> float:
    """Minimum total cost of transforming ``a`` into ``b``.

    Computed by full dynamic programming over the whole cost table; each call
    counts as exactly one evaluation, empty inputs included.
    """
    model.check_sequence(a)
    model.check_sequence(b)
    arr_a = as_codes(a)
    arr_b = as_codes(b)
    counter.add()
    return dist_padded(arr_a, len(arr_a), arr_b, len(arr_b),
                       model.substitution_matrix, model.indel)


@dataclass(frozen=True)
class EditOperation:
    """One substitution, insertion, or deletion at a position.

    Positions refer to the string the operation is applied to, so a script
    replayed left-to-right uses coordinates of the evolving string.
    """

    kind: str  # "substitute" | "insert" | "delete"
    position: int
    symbol: int | None = None

    def apply(self, seq: PySequence[int]) -> Seq:
        s = list(seq)
        if self.kind == "substitute":
            s[self.position] = self.symbol
        elif self.kind == "insert":
            s.insert(self.position, self.symbol)
        elif self.kind == "delete":
            del s[self.position]
        else:
            raise ValueError(f"unknown edit kind {self.kind!r}")
        return tuple(s)


def substitute(position: int, symbol: int) -> EditOperation:
    return EditOperation("substitute", position, symbol)


def insert(position: int, symbol: int) -> EditOperation:
    return EditOperation("insert", position, symbol)


def delete(position: int) -> EditOperation:
    return EditOperation("delete", position)


def edit_script(a: PySequence[int], b: PySequence[int],
                model: CostModel) -> list[EditOperation]:
    """A minimum-cost operation list transforming ``a`` into ``b``.

    Test utility: does not touch any evaluation counter. DP ties are broken
    preferring match/substitute over delete over insert, which makes the
    returned script deterministic.
    """
    model.check_sequence(a)
    model.check_sequence(b)
    la, lb = len(a), len(b)
    indel = model.indel
    sub = model.substitution_matrix
    table = np.empty((la + 1, lb + 1), np.float64)
    table[0, :] = np.arange(lb + 1) * indel
    table[:, 0] = np.arange(la + 1) * indel
    for i in range(1, la + 1):
        for j in range(1, lb + 1):
            table[i, j] = min(
                table[i - 1, j - 1] + sub[a[i - 1], b[j - 1]],
                table[i - 1, j] + indel,
                table[i, j - 1] + indel,
            )
    # Backward pass; steps are reversed afterwards so positions can be
    # rewritten in the coordinates of the evolving string.
    steps = []
    i, j = la, lb
    while i > 0 or j > 0:
        if i > 0 and j > 0 and table[i, j] == table[i - 1, j - 1] + sub[a[i - 1], b[j - 1]]:
            steps.append(("diag", i - 1, j - 1))
            i, j = i - 1, j - 1
        elif i > 0 and table[i, j] == table[i - 1, j] + indel:
            steps.append(("del", i - 1, j))
            i -= 1
        else:
            steps.append(("ins", i, j - 1))
            j -= 1
    steps.reverse()
    ops: list[EditOperation] = []
    shift = 0
    for step, ia, jb in steps:
        if step == "diag":
            if a[ia] != b[jb]:
                ops.append(substitute(ia + shift, b[jb]))
        elif step == "del":
            ops.append(delete(ia + shift))
            shift -= 1
        else:
            ops.append(insert(ia + shift, b[jb]))
            shift += 1
    return ops
