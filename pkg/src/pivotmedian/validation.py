"""Input coercion and validation shared by the estimator and the CLI."""

from __future__ import annotations

from typing import Iterable, Sequence as PySequence

from .distance import Seq, SymbolError, encode


def check_alpha(alpha: float | None) -> float | None:
    if alpha is not None and not 0.0 <= alpha <= 1.0:
        raise ValueError("alpha must lie in [0, 1]")
    return alpha


def as_sequence(x: str | PySequence[int], alphabet_size: int) -> Seq:
    """Coerce one sample (text or iterable of codes) to a code tuple."""
    if isinstance(x, str):
        return encode(x, alphabet_size)
    seq = tuple(int(v) for v in x)
    for code in seq:
        if not 0 <= code < alphabet_size:
            raise SymbolError(
                f"symbol {code} out of range for alphabet size {alphabet_size}"
            )
    return seq


def as_sequences(X: Iterable[str | PySequence[int]], alphabet_size: int) -> list[Seq]:
    """Coerce a collection of samples, rejecting anything off-alphabet."""
    seqs = [as_sequence(x, alphabet_size) for x in X]
    if not seqs:
        raise ValueError("at least one sequence is required")
    return seqs


def infer_alphabet_size(X: Iterable[str | PySequence[int]]) -> int:
    """Smallest alphabet covering every symbol in ``X`` (at least 1)."""
    top = 0
    for x in X:
        if isinstance(x, str):
            seq = encode(x, 36)
        else:
            seq = tuple(int(v) for v in x)
        for code in seq:
            if code < 0:
                raise SymbolError(f"negative symbol code {code}")
            top = max(top, code + 1)
    return max(top, 1)
