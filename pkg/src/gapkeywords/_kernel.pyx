# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled gap-moment accumulator: one O(N) pass over the token-id stream.

Same contract as gapkeywords._kernel_fallback.gap_moment_sums; the selector in
gapkeywords.kernel picks whichever is importable.
"""

import numpy as np

from libc.stdint cimport int64_t


def gap_moment_sums(const int64_t[::1] token_ids, Py_ssize_t n_vocab):
    """Per word id: occurrence count, first/last position (-1 when absent),
    and the sums of squared and sixth-power gaps between consecutive
    occurrences. Gap sums are double precision: sixth powers overflow int64
    for gaps beyond ~1000."""
    cdef Py_ssize_t n = token_ids.shape[0]

    counts_arr = np.zeros(n_vocab, dtype=np.int64)
    first_arr = np.full(n_vocab, -1, dtype=np.int64)
    last_arr = np.full(n_vocab, -1, dtype=np.int64)
    sum_sq_arr = np.zeros(n_vocab, dtype=np.float64)
    sum_six_arr = np.zeros(n_vocab, dtype=np.float64)

    cdef int64_t[::1] counts = counts_arr
    cdef int64_t[::1] first = first_arr
    cdef int64_t[::1] last = last_arr
    cdef double[::1] sum_sq = sum_sq_arr
    cdef double[::1] sum_six = sum_six_arr

    cdef Py_ssize_t i
    cdef int64_t t
    cdef double gap, gap_sq

    for i in range(n):
        t = token_ids[i]
        if last[t] >= 0:
            gap = <double> (i - last[t])
            gap_sq = gap * gap
            sum_sq[t] += gap_sq
            sum_six[t] += gap_sq * gap_sq * gap_sq
        else:
            first[t] = i
        last[t] = i
        counts[t] += 1

    return counts_arr, first_arr, last_arr, sum_sq_arr, sum_six_arr
