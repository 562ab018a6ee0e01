"""Vectorized numpy implementation of the gap-moment accumulator.

Used when the compiled extension is unavailable (pure install, or forced via
the GAPKEYWORDS_PURE environment variable). Results match the compiled kernel
exactly for the squared sums (integers below 2**53) and to the last ulp for
the sixth-power sums, whose summation order differs.
"""

from __future__ import annotations

import numpy as np


def gap_moment_sums(
    token_ids: np.ndarray, n_vocab: int
) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    """Per word id: occurrence count, first/last position (-1 when absent),
    and the sums of squared and sixth-power gaps between consecutive
    occurrences."""
    n = token_ids.shape[0]
    counts = np.bincount(token_ids, minlength=n_vocab).astype(np.int64)
    first = np.full(n_vocab, -1, dtype=np.int64)
    last = np.full(n_vocab, -1, dtype=np.int64)
    sum_sq = np.zeros(n_vocab, dtype=np.float64)
    sum_six = np.zeros(n_vocab, dtype=np.float64)
    if n == 0:
        return counts, first, last, sum_sq, sum_six

    # Stable argsort groups positions by word id, ascending within each group.
    order = np.argsort(token_ids, kind="stable").astype(np.int64)
    sorted_ids = token_ids[order]
    group_start = np.empty(n, dtype=bool)
    group_start[0] = True
    group_start[1:] = sorted_ids[1:] != sorted_ids[:-1]
    starts = np.flatnonzero(group_start)
    ends = np.append(starts[1:], n) - 1
    first[sorted_ids[starts]] = order[starts]
    last[sorted_ids[starts]] = order[ends]

    within = ~group_start[1:]
    gaps = (order[1:] - order[:-1])[within].astype(np.float64)
    gap_ids = sorted_ids[1:][within]
    sum_sq = np.bincount(gap_ids, weights=gaps * gaps, minlength=n_vocab)
    sum_six = np.bincount(gap_ids, weights=gaps**6, minlength=n_vocab)
    return counts, first, last, sum_sq, sum_six
