"""Seeded uniform shuffles of the token stream and the response of each
word's gap moments to them.

The shuffle is numpy's Fisher-Yates permutation driven by the PCG64 bit
generator; ``GENERATOR_NAME`` records that choice in every report and must
stay stable across releases so published seeds keep reproducing. Averaging
over ``realizations`` permutations uses seeds ``seed, seed + 1, ...``. One
permutation is drawn per realization and shared by all words, so scoring a
single word and scoring the whole vocabulary agree exactly for the same seed.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from . import kernel
from .corpus import Document, build_document
from .errors import UndefinedStatisticError, WordNotFoundError

GENERATOR_NAME = "numpy-pcg64"
DEFAULT_SEED = 0


def _rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(seed))


def permute(doc: Document, seed: int = DEFAULT_SEED) -> Document:
    """Return a uniformly shuffled copy of the document, deterministic in
    ``seed``. The token multiset (hence every word count and ordinary
    frequency) is preserved; chapter boundaries are dropped."""
    order = _rng(seed).permutation(doc.N)
    tokens = doc.tokens
    return build_document([tokens[i] for i in order])


class _VocabMoments(NamedTuple):
    """Moment arrays aligned with ``doc.vocab``; NaN where fewer than two
    occurrences make the statistic undefined."""

    counts: np.ndarray
    mean_gap: np.ndarray
    second: np.ndarray
    sixth: np.ndarray


def _moments_from_sums(counts, first, last, sum_sq, sum_six) -> _VocabMoments:
    denom = np.maximum(counts - 1, 1).astype(np.float64)
    mean_gap = (last - first) / denom
    second = sum_sq / denom
    sixth = sum_six / denom
    undefined = counts < 2
    for arr in (mean_gap, second, sixth):
        arr[undefined] = np.nan
    return _VocabMoments(counts, mean_gap, second, sixth)


def original_moments(doc: Document) -> _VocabMoments:
    """Gap moments of every word in the document as laid out on the page."""
    sums = kernel.gap_moment_sums(doc.token_ids, len(doc.vocab))
    return _moments_from_sums(*sums)


def permuted_moments(
    doc: Document, seed: int = DEFAULT_SEED, realizations: int = 1
) -> tuple[np.ndarray, np.ndarray]:
    """Second and sixth gap moments averaged over ``realizations`` seeded
    shuffles, aligned with ``doc.vocab``."""
    if realizations < 1:
        raise ValueError("realizations must be at least 1")
    ids = doc.token_ids
    n_vocab = len(doc.vocab)
    second = np.zeros(n_vocab, dtype=np.float64)
    sixth = np.zeros(n_vocab, dtype=np.float64)
    for r in range(realizations):
        order = _rng(seed + r).permutation(doc.N)
        moments = _moments_from_sums(*kernel.gap_moment_sums(ids[order], n_vocab))
        second += moments.second
        sixth += moments.sixth
    return second / realizations, sixth / realizations


@dataclass(frozen=True)
class PermutationScore:
    """How a word's gap moments respond to shuffling: permuted over original
    second and sixth moments. Ratios are positive whenever defined (every gap
    is at least 1). Values well below 1 mean shuffling homogenized a spread-out
    word; values well above 1 mean it dispersed a clustered one."""

    word: str
    second_moment_ratio: float
    sixth_moment_ratio: float
    realizations: int
    seed: int


def score_all_words(
    doc: Document, seed: int = DEFAULT_SEED, realizations: int = 1
) -> dict[str, PermutationScore]:
    """Moment-response scores for every word with at least two occurrences,
    all realizations sharing one permutation of the whole text."""
    orig = original_moments(doc)
    perm_second, perm_sixth = permuted_moments(doc, seed, realizations)
    scores: dict[str, PermutationScore] = {}
    for word, wid in doc.word_index.items():
        if orig.counts[wid] < 2:
            continue
        scores[word] = PermutationScore(
            word=word,
            second_moment_ratio=float(perm_second[wid] / orig.second[wid]),
            sixth_moment_ratio=float(perm_sixth[wid] / orig.sixth[wid]),
            realizations=realizations,
            seed=seed,
        )
    return scores


def permutation_score(
    doc: Document,
    word: str,
    seed: int = DEFAULT_SEED,
    realizations: int = 1,
) -> PermutationScore:
    """Score a single word; equals the corresponding :func:`score_all_words`
    entry because the permutation depends only on the seed, not the word."""
    wid = doc.word_index.get(word)
    if wid is None:
        raise WordNotFoundError(word)
    if len(doc.positions[word]) < 2:
        raise UndefinedStatisticError(
            f"permutation score needs at least two occurrences of {word!r}"
        )
    orig = original_moments(doc)
    perm_second, perm_sixth = permuted_moments(doc, seed, realizations)
    return PermutationScore(
        word=word,
        second_moment_ratio=float(perm_second[wid] / orig.second[wid]),
        sixth_moment_ratio=float(perm_sixth[wid] / orig.sixth[wid]),
        realizations=realizations,
        seed=seed,
    )
