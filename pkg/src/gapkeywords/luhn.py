"""Frequency-cutoff baseline: rank words by frequency and keep everything up
to the rank where the Zipf fit breaks down.

With stop-words already removed there is no high-frequency cutoff, so the
candidate list is simply the top of the rank-frequency table. The
low-frequency cutoff is the first rank at which ten or more distinct words
share a frequency: past that point the rank-frequency curve turns into steps
and a single power law no longer fits.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .corpus import Document
from .extractor import KeywordEntry
from .gap_stats import rank_frequency_table

PLATEAU_SIZE = 10


@dataclass(frozen=True)
class LuhnCutoffs:
    """Rank window [min_rank, max_rank] and the table slice it selects."""

    min_rank: int
    max_rank: int
    ranked_words: tuple[tuple[str, int, int], ...]


def zipf_r10(table: list[tuple[str, int, int]]) -> int:
    """Smallest rank whose frequency is shared by at least ten distinct
    words; the last rank when no such plateau exists (short texts may have
    none)."""
    if not table:
        raise ValueError("empty rank-frequency table")
    plateau = Counter(count for _, count, _ in table)
    for _, count, rank in table:
        if plateau[count] >= PLATEAU_SIZE:
            return rank
    return table[-1][2]


def luhn_cutoffs(doc: Document) -> LuhnCutoffs:
    table = rank_frequency_table(doc)
    if not table:
        raise ValueError("empty document has no rank-frequency cutoffs")
    r_max = zipf_r10(table)
    return LuhnCutoffs(min_rank=1, max_rank=r_max, ranked_words=tuple(table[:r_max]))


def luhn_extract(doc: Document, max_words: int | None = None) -> list[KeywordEntry]:
    """First ``min(max_words, cutoff rank)`` entries of the rank-frequency
    table, scored by their counts. Always a prefix of the table, so scores are
    nonincreasing. An empty document yields an empty list."""
    if doc.N == 0:
        return []
    selected = luhn_cutoffs(doc).ranked_words
    if max_words is not None:
        if max_words < 0:
            raise ValueError("max_words must be non-negative")
        selected = selected[:max_words]
    return [
        KeywordEntry(word=word, score=float(count), rank=rank, count=count)
        for word, count, rank in selected
    ]
