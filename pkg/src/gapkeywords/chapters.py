"""Keyword scoring from the distribution of words over chapters.

For a word, ``occupancy[s]`` counts the chapters containing it exactly ``s``
times (s >= 1 only; empty chapters contribute nothing). Drawing a random
occurrence of the word, ``s * occupancy[s] / count`` is the probability of
landing in a chapter that holds it ``s`` times, and the score is the mean of
``s`` under that draw. Words that pile up within chapters while spanning many
of them score high; the entropy variant measures the spread of the same
distribution. No random permutations are involved, so the method is cheap,
but it needs a document with enough chapters.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Mapping

import numpy as np

from .corpus import Document
from .errors import UndefinedStatisticError, UnsupportedDocumentError, WordNotFoundError


@dataclass(frozen=True)
class ChapterHistogram:
    """Per-chapter counts and the occupancy histogram of one word.

    Both maps are sparse: chapters where the word is absent and occupancy
    levels never attained are simply missing. The stored values satisfy
    ``sum(counts_per_chapter.values()) == total_count`` and
    ``sum(s * v for s, v in occupancy.items()) == total_count`` exactly.
    """

    word: str
    counts_per_chapter: Mapping[int, int]
    occupancy: Mapping[int, int]
    total_count: int


def chapter_histogram(doc: Document, word: str) -> ChapterHistogram:
    """Count the word per chapter and build its occupancy histogram."""
    if doc.N_chap < 1:
        raise UnsupportedDocumentError("document has no chapter boundaries")
    pos = doc.positions.get(word)
    if pos is None:
        raise WordNotFoundError(word)
    chapter_ids = doc.chapter_ids[pos]
    chapters, counts = np.unique(chapter_ids, return_counts=True)
    levels, level_counts = np.unique(counts, return_counts=True)
    return ChapterHistogram(
        word=word,
        counts_per_chapter=dict(zip(chapters.tolist(), counts.tolist())),
        occupancy=dict(zip(levels.tolist(), level_counts.tolist())),
        total_count=int(counts.sum()),
    )


def chapter_score(hist: ChapterHistogram) -> float:
    """Occurrence-weighted mean per-chapter count: 1 for a word appearing
    once per chapter, up to the total count for a word confined to a single
    chapter."""
    if hist.total_count < 1:
        raise UndefinedStatisticError("chapter score needs at least one occurrence")
    return sum(s * s * v for s, v in hist.occupancy.items()) / hist.total_count


def chapter_entropy_score(hist: ChapterHistogram) -> float:
    """Entropy (natural log) of the occurrence-weighted occupancy
    distribution; 0 when all mass sits at one level."""
    if hist.total_count < 1:
        raise UndefinedStatisticError("entropy score needs at least one occurrence")
    total = hist.total_count
    entropy = 0.0
    for s, v in hist.occupancy.items():
        p = s * v / total
        if p > 0.0:
            entropy -= p * math.log(p)
    return entropy


@dataclass(frozen=True)
class ChapterScoreRecord:
    word: str
    score: float
    entropy_score: float
    count: int


def chapter_table(doc: Document) -> list[ChapterScoreRecord]:
    """Score every word, ordered by descending score, then descending count,
    then word. Scores only depend on each word's per-chapter count multiset,
    so relabeling chapters changes nothing."""
    if doc.N_chap < 1:
        raise UnsupportedDocumentError("document has no chapter boundaries")
    records = []
    for word in doc.vocab:
        hist = chapter_histogram(doc, word)
        records.append(
            ChapterScoreRecord(
                word=word,
                score=chapter_score(hist),
                entropy_score=chapter_entropy_score(hist),
                count=hist.total_count,
            )
        )
    records.sort(key=lambda r: (-r.score, -r.count, r.word))
    return records


def top_by_chapter_score(doc: Document, n: int) -> list[tuple[str, float]]:
    """Top ``n`` words by chapter score (whole vocabulary when ``n`` exceeds
    it). Needs at least two chapters to be meaningful."""
    if doc.N_chap < 2:
        raise UnsupportedDocumentError("chapter ranking needs at least two chapters")
    if n < 0:
        raise ValueError("n must be non-negative")
    return [(r.word, r.score) for r in chapter_table(doc)[:n]]
