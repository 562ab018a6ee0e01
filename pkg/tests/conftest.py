"""Shared fixtures: a small three-chapter text, synthetic documents with known
structure, and the optional full-novel fixture for the end-to-end tests."""

from __future__ import annotations

import os
from pathlib import Path

import numpy as np
import pytest

import gapkeywords as gk

# Three short chapters with headings, a byline, hyphens and possessives, so
# chapter detection and token joining are exercised on one realistic blob.
CHAPTER_FIXTURE = """\
THE LIGHTHOUSE KEEPER

by A Nobody

CHAPTER I. The Harbour.

The keeper's lamp burned all night above the harbour, and the fishermen
steered by its self-possessed glow. Old Marten had kept the light for
thirty-one years, and he knew every rock between the pier and the open
water. "Mind the north channel," he would say, "for the sand shifts there."

CHAPTER II. The Storm.

On the third night of October a storm came up from the south-west. Marten
trimmed the wick and watched the glass fall. The harbour boats ran home
before the wind, and the keeper counted them one by one as they passed
the pier light.

CHAPTER III. The Morning.

By morning the storm had blown itself out. Marten doused the lamp,
climbed down the long stair, and walked the shingle to count the boats
again. Not one was missing; the light had held them all in its keeping.
"""

FIXTURE_STOPWORDS = frozenset(
    {"the", "a", "an", "and", "of", "to", "in", "was", "it", "on", "at", "by",
     "he", "his", "her", "for", "all"}
)

CHAPTER_PATTERN = r"^CHAPTER.*$"


@pytest.fixture(scope="session")
def fixture_config() -> gk.TokenizerConfig:
    return gk.TokenizerConfig(stopword_list=FIXTURE_STOPWORDS)


@pytest.fixture(scope="session")
def chapter_doc(fixture_config) -> gk.Document:
    breaks = gk.detect_chapters(CHAPTER_FIXTURE, CHAPTER_PATTERN, fixture_config)
    return gk.build_document(gk.tokenize(CHAPTER_FIXTURE, fixture_config), breaks)


def make_novel_tokens(n: int = 60000, seed: int = 11) -> list[str]:
    """Novel-like synthetic stream: 50 spread-out frequent words over 10
    themes of 150 clustered content words each, theme drifting slowly."""
    rng = np.random.default_rng(seed)
    n_common, n_theme_words, n_themes = 50, 150, 10
    common_p = 1.0 / np.arange(1, n_common + 1) ** 0.8
    common_p /= common_p.sum()
    theme_p = 1.0 / np.arange(1, n_theme_words + 1) ** 1.1
    theme_p /= theme_p.sum()

    switch = rng.random(n) < 0.001
    theme_seq = np.zeros(n, dtype=np.int64)
    theme = 0
    for i in range(n):
        if switch[i]:
            theme = rng.integers(0, n_themes)
        theme_seq[i] = theme
    is_common = rng.random(n) < 0.45
    common_ids = rng.choice(n_common, size=n, p=common_p)
    theme_ids = rng.choice(n_theme_words, size=n, p=theme_p)
    return [
        f"common{common_ids[i]:03d}"
        if is_common[i]
        else f"theme{theme_seq[i]}word{theme_ids[i]:03d}"
        for i in range(n)
    ]


@pytest.fixture(scope="session")
def novel_doc() -> gk.Document:
    return gk.build_document(make_novel_tokens())


def build_planted_document(
    n_tokens: int = 100_000,
    n_clustered: int = 20,
    clustered_occurrences: int = 50,
    window: int = 500,
    n_bursty: int = 5,
    bursts: int = 10,
    burst_len: int = 20,
    filler_vocab: int = 5000,
    seed: int = 1234,
) -> tuple[gk.Document, list[str], list[str]]:
    """Text with known keyword structure: fully clustered words confined to
    narrow windows, and bursty words whose run-of-adjacent-occurrences bursts
    span the whole text. Returns (document, clustered words, bursty words)."""
    rng = np.random.default_rng(seed)
    slots = np.full(n_tokens, -1, dtype=np.int64)

    usable = n_tokens - burst_len
    for j in range(n_bursty):
        starts = ((np.arange(bursts) + 0.5) * usable / bursts).astype(int)
        starts = starts + j * (burst_len + 30)
        for s in starts:
            s = int(min(s, usable))
            while slots[s : s + burst_len].max(initial=-1) >= 0:
                s = (s + burst_len + 5) % usable
            slots[s : s + burst_len] = n_clustered + j

    centers = ((np.arange(n_clustered) + 0.5) * n_tokens / n_clustered).astype(int)
    for i, center in enumerate(centers):
        lo = max(center - window // 2, 0)
        free = np.flatnonzero(slots[lo : lo + window] == -1) + lo
        slots[rng.choice(free, size=clustered_occurrences, replace=False)] = i

    clustered = [f"cluster{i:02d}" for i in range(n_clustered)]
    bursty = [f"burst{j}" for j in range(n_bursty)]
    names = clustered + bursty
    filler_ids = rng.integers(0, filler_vocab, size=n_tokens)
    tokens = [
        names[s] if s >= 0 else f"filler{f:04d}"
        for s, f in zip(slots.tolist(), filler_ids.tolist())
    ]
    return gk.build_document(tokens), clustered, bursty


@pytest.fixture(scope="session")
def planted() -> tuple[gk.Document, list[str], list[str]]:
    return build_planted_document()


def anna_karenina_path() -> Path | None:
    """Full-novel fixture: env override first, then the conventional path
    populated by scripts/fetch_anna_karenina.py."""
    env = os.environ.get("GAPKEYWORDS_AK")
    if env:
        p = Path(env)
        return p if p.exists() else None
    p = Path(__file__).parent / "fixtures" / "anna_karenina.txt"
    return p if p.exists() else None


def require_anna_karenina() -> Path:
    path = anna_karenina_path()
    if path is None:
        pytest.skip(
            "full-novel fixture missing (no network in this environment): run "
            "scripts/fetch_anna_karenina.py or set GAPKEYWORDS_AK to the text file"
        )
    return path


@pytest.fixture(scope="session")
def full_novel_doc() -> gk.Document:
    """The fetched full-novel fixture, tokenized with the shipped stop-word
    list and split on its chapter headings; dependents skip when absent."""
    path = require_anna_karenina()
    config = gk.TokenizerConfig(
        stopword_list=gk.load_stopwords(gk.default_stopwords_path())
    )
    raw = path.read_text(encoding="utf-8")
    breaks = gk.detect_chapters(raw, r"^Chapter \d+", config)
    return gk.build_document(gk.tokenize(raw, config), breaks)
