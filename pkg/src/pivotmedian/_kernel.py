"""JIT-compiled dynamic-programming kernels.

Everything here works on int64 code arrays and a dense float64 substitution
matrix; callers are responsible for validating symbols against the alphabet
before handing arrays down. Costs must be symmetric (enforced by CostModel),
which lets the pair kernel swap operands so the rolling rows span the shorter
sequence.
"""

from __future__ import annotations

import numba as nb
import numpy as np

_SIG_DIST = nb.float64(
    nb.int64[::1], nb.int64, nb.int64[::1], nb.int64, nb.float64[:, ::1], nb.float64
)
_SIG_BATCH = nb.float64[::1](
    nb.int64[:, ::1],
    nb.int64[::1],
    nb.int64[:, ::1],
    nb.int64[::1],
    nb.float64[::1],
    nb.float64[:, ::1],
    nb.float64,
)


@nb.njit(_SIG_DIST, cache=True, nogil=True)
def dist_padded(a, la, b, lb, sub, indel):
    # Wagner-Fischer over two rolling rows; rows iterate the longer operand.
    if lb > la:
        a, b = b, a
        la, lb = lb, la
    prev = np.empty(lb + 1, np.float64)
    curr = np.empty(lb + 1, np.float64)
    for j in range(lb + 1):
        prev[j] = j * indel
    for i in range(1, la + 1):
        curr[0] = i * indel
        subrow = sub[a[i - 1]]
        for j in range(1, lb + 1):
            best = prev[j - 1] + subrow[b[j - 1]]
            gap = prev[j] + indel
            if gap < best:
                best = gap
            gap = curr[j - 1] + indel
            if gap < best:
                best = gap
            curr[j] = best
        tmp = prev
        prev = curr
        curr = tmp
    return prev[lb]


@nb.njit(_SIG_BATCH, cache=True, nogil=True)
def batch_objective(cands, cand_lens, targets, target_lens, weights, sub, indel):
    # Weighted cumulative distance of every candidate row against all targets.
    n = cands.shape[0]
    out = np.zeros(n, np.float64)
    for i in range(n):
        total = 0.0
        for t in range(targets.shape[0]):
            total += weights[t] * dist_padded(
                cands[i], cand_lens[i], targets[t], target_lens[t], sub, indel
            )
        out[i] = total
    return out


def pack(seqs) -> tuple[np.ndarray, np.ndarray]:
    """Pad a list of code tuples into an int64 matrix plus a length vector."""
    n = len(seqs)
    width = max((len(s) for s in seqs), default=0)
    mat = np.zeros((n, max(width, 1)), np.int64)
    lens = np.empty(n, np.int64)
    for i, s in enumerate(seqs):
        lens[i] = len(s)
        if s:
            mat[i, : len(s)] = s
    return np.ascontiguousarray(mat), lens
