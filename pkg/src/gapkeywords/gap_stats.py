"""Per-word gap sequences, their moments, and the frequency diagnostics
behind the rank/frequency plots.

A gap is the successor-position difference between consecutive occurrences of
the same word, so adjacent occurrences have gap 1. The stretches before the
first and after the last occurrence are never counted, which is why every
statistic here needs at least two occurrences.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass
from typing import Iterable, Sequence, TextIO

import numpy as np

from .corpus import Document
from .errors import UndefinedStatisticError, WordNotFoundError
from .permutation import DEFAULT_SEED, original_moments, permuted_moments


def gap_sequence(doc: Document, word: str) -> list[int]:
    """Successor-position differences between consecutive occurrences."""
    pos = doc.positions.get(word)
    if pos is None:
        raise WordNotFoundError(word)
    if len(pos) < 2:
        raise UndefinedStatisticError(
            f"gap statistics need at least two occurrences of {word!r}"
        )
    return np.diff(pos).tolist()


def moment(gaps: Sequence[int], k: int = 1) -> float:
    """k-th raw moment of a gap sequence, in double precision.

    Orders 1, 2 and 6 are the ones used downstream. Sixth powers of gaps up to
    a few hundred thousand stay far below the double-precision maximum.
    """
    if len(gaps) == 0:
        raise UndefinedStatisticError("empty gap sequence has no moments")
    if k < 1:
        raise ValueError("moment order must be a positive integer")
    arr = np.asarray(gaps, dtype=np.float64)
    return float(np.mean(arr**k))


@dataclass(frozen=True)
class GapProfile:
    """A word's gap sequence and derived statistics.

    ``mean_gap``/``second_moment``/``sixth_moment`` are the raw gap moments,
    ``spatial_frequency`` is the reciprocal mean gap, and ``frequency`` is the
    ordinary count-over-length frequency.
    """

    word: str
    occurrences: int
    gaps: tuple[int, ...]
    mean_gap: float
    second_moment: float
    sixth_moment: float
    spatial_frequency: float
    frequency: float


def gap_profile(doc: Document, word: str) -> GapProfile:
    """Compute the full gap profile of ``word`` (needs two occurrences)."""
    gaps = tuple(gap_sequence(doc, word))
    mean_gap = moment(gaps, 1)
    return GapProfile(
        word=word,
        occurrences=len(doc.positions[word]),
        gaps=gaps,
        mean_gap=mean_gap,
        second_moment=moment(gaps, 2),
        sixth_moment=moment(gaps, 6),
        spatial_frequency=1.0 / mean_gap,
        frequency=len(doc.positions[word]) / doc.N,
    )


def spatial_frequency(profile: GapProfile) -> float:
    """Reciprocal mean gap: 1 when all occurrences are adjacent, down to
    1/(N-1) for a word occurring only as the first and last token."""
    return 1.0 / profile.mean_gap


def ordinary_frequency(doc: Document, word: str) -> float:
    """Occurrence count over document length; invariant under any shuffle."""
    pos = doc.positions.get(word)
    if pos is None:
        raise WordNotFoundError(word)
    return len(pos) / doc.N


def geometric_gap_mean(frequency: float) -> float:
    """Mean gap (1-f)/f of the Bernoulli model that generates a word
    independently with probability f; its reciprocal estimates the permuted
    spatial frequency of frequent words."""
    if not 0.0 < frequency < 1.0:
        raise ValueError("frequency must lie strictly between 0 and 1")
    return (1.0 - frequency) / frequency


def rank_frequency_table(doc: Document) -> list[tuple[str, int, int]]:
    """(word, count, rank) sorted by descending count; ties break
    lexicographically so reports are reproducible. Ranks start at 1."""
    ordered = sorted(doc.positions.items(), key=lambda kv: (-len(kv[1]), kv[0]))
    return [(word, len(pos), rank) for rank, (word, pos) in enumerate(ordered, 1)]


@dataclass(frozen=True)
class StatsRecord:
    """One row of the rank/frequency dump: ordinary frequency, spatial
    frequency, reciprocal second moments before and after one seeded shuffle,
    and the Bernoulli-model estimate f/(1-f)."""

    rank: int
    word: str
    f: float
    tau: float
    inv_c2: float
    inv_c2_perm: float
    f_over_1mf: float


def stats_dump(
    doc: Document, seed: int = DEFAULT_SEED, realizations: int = 1
) -> list[StatsRecord]:
    """One record per word with at least two occurrences, ordered by
    frequency rank; enough to re-plot the rank/frequency diagnostics."""
    if doc.N == 0:
        return []
    orig = original_moments(doc)
    perm_second, _ = permuted_moments(doc, seed, realizations)
    records = []
    for word, count, rank in rank_frequency_table(doc):
        if count < 2:
            continue
        wid = doc.word_index[word]
        f = count / doc.N
        records.append(
            StatsRecord(
                rank=rank,
                word=word,
                f=f,
                tau=1.0 / float(orig.mean_gap[wid]),
                inv_c2=1.0 / float(orig.second[wid]),
                inv_c2_perm=1.0 / float(perm_second[wid]),
                f_over_1mf=f / (1.0 - f) if f < 1.0 else math.inf,
            )
        )
    return records


STATS_CSV_HEADER = ["rank", "word", "f", "tau", "inv_c2", "inv_c2_perm", "f_over_1mf"]


def write_stats_csv(records: Iterable[StatsRecord], fh: TextIO) -> None:
    writer = csv.writer(fh)
    writer.writerow(STATS_CSV_HEADER)
    for r in records:
        writer.writerow(
            [r.rank, r.word, r.f, r.tau, r.inv_c2, r.inv_c2_perm, r.f_over_1mf]
        )
