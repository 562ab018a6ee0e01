"""Turn permutation scores into the keyword partition: strong-global,
weak-global, and local keywords, with a long/short document mode switch.

Long documents use the second-moment response; short ones (where the second
moment separates poorly) use the sixth, which is more sensitive to clustering.
Boundary values go to the stronger bucket, so a ratio exactly at the strong
cutoff is strong, not weak.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass
from typing import Iterator

from .corpus import Document
from .errors import UndefinedStatisticError, ValidationError
from .gap_stats import rank_frequency_table
from .permutation import DEFAULT_SEED, GENERATOR_NAME, score_all_words

MODE_LONG = "long"
MODE_SHORT = "short"


@dataclass(frozen=True)
class Thresholds:
    """Cutoffs on the moment-response ratios plus the long/short length split.

    Defaults: global keywords respond with a ratio at most 1/5 (strong) or
    1/3 (weak), local keywords with at least 5; short documents use 1/3 and 3
    on the sixth-moment ratio. Documents with at least 70000 tokens (after
    stop-word removal) count as long.
    """

    strong_global_max: float = 1.0 / 5.0
    weak_global_max: float = 1.0 / 3.0
    local_min: float = 5.0
    short_global_max: float = 1.0 / 3.0
    short_local_min: float = 3.0
    long_text_min_tokens: int = 70000

    def __post_init__(self) -> None:
        if not (0 < self.strong_global_max < self.weak_global_max < 1 < self.local_min):
            raise ValidationError(
                "need 0 < strong_global_max < weak_global_max < 1 < local_min"
            )
        if not (0 < self.short_global_max < 1 < self.short_local_min):
            raise ValidationError("need 0 < short_global_max < 1 < short_local_min")
        if self.long_text_min_tokens < 0:
            raise ValidationError("long_text_min_tokens must be non-negative")


@dataclass(frozen=True)
class KeywordEntry:
    word: str
    score: float
    rank: int
    count: int


@dataclass(frozen=True)
class KeywordReport:
    """Partition of candidate words into the three buckets, each ordered by
    descending count (ties lexicographic), with full seed provenance. The
    buckets are pairwise disjoint and contain only words occurring at least
    twice. Short mode reports its single global bucket as ``strong_global``
    and leaves ``weak_global`` empty so one schema serves both modes."""

    mode: str
    seed: int
    realizations: int
    generator_name: str
    thresholds: Thresholds
    strong_global: tuple[KeywordEntry, ...]
    weak_global: tuple[KeywordEntry, ...]
    local: tuple[KeywordEntry, ...]

    def buckets(self) -> Iterator[tuple[str, tuple[KeywordEntry, ...]]]:
        yield "strong_global", self.strong_global
        yield "weak_global", self.weak_global
        yield "local", self.local

    def to_dict(self) -> dict:
        return {
            "mode": self.mode,
            "seed": self.seed,
            "realizations": self.realizations,
            "generator_name": self.generator_name,
            "thresholds": asdict(self.thresholds),
            **{
                bucket: [asdict(entry) for entry in entries]
                for bucket, entries in self.buckets()
            },
        }


def select_mode(doc: Document, thresholds: Thresholds | None = None) -> str:
    """Long exactly when the post-stop-word token count reaches the cutoff."""
    thresholds = thresholds or Thresholds()
    return MODE_LONG if doc.N >= thresholds.long_text_min_tokens else MODE_SHORT


def _rank_lookup(doc: Document) -> dict[str, tuple[int, int]]:
    return {word: (count, rank) for word, count, rank in rank_frequency_table(doc)}


def _entries(
    ranks: dict[str, tuple[int, int]], words: list[tuple[str, float]]
) -> tuple[KeywordEntry, ...]:
    entries = [
        KeywordEntry(word=w, score=s, rank=ranks[w][1], count=ranks[w][0])
        for w, s in words
    ]
    entries.sort(key=lambda e: e.rank)
    return tuple(entries)


def classify_long(
    doc: Document,
    thresholds: Thresholds | None = None,
    seed: int = DEFAULT_SEED,
    realizations: int = 1,
) -> KeywordReport:
    """Partition by the second-moment response: strong global at or below
    ``strong_global_max``, weak global up to ``weak_global_max``, local at or
    above ``local_min``; everything in between is omitted."""
    t = thresholds or Thresholds()
    scores = score_all_words(doc, seed=seed, realizations=realizations)
    strong, weak, local = [], [], []
    for word, score in scores.items():
        ratio = score.second_moment_ratio
        if ratio <= t.strong_global_max:
            strong.append((word, ratio))
        elif ratio <= t.weak_global_max:
            weak.append((word, ratio))
        elif ratio >= t.local_min:
            local.append((word, ratio))
    ranks = _rank_lookup(doc)
    return KeywordReport(
        mode=MODE_LONG,
        seed=seed,
        realizations=realizations,
        generator_name=GENERATOR_NAME,
        thresholds=t,
        strong_global=_entries(ranks, strong),
        weak_global=_entries(ranks, weak),
        local=_entries(ranks, local),
    )


def classify_short(
    doc: Document,
    thresholds: Thresholds | None = None,
    seed: int = DEFAULT_SEED,
    realizations: int = 1,
) -> KeywordReport:
    """Partition by the sixth-moment response: global at or below
    ``short_global_max`` (reported as strong), local at or above
    ``short_local_min``."""
    t = thresholds or Thresholds()
    scores = score_all_words(doc, seed=seed, realizations=realizations)
    global_words, local = [], []
    for word, score in scores.items():
        ratio = score.sixth_moment_ratio
        if ratio <= t.short_global_max:
            global_words.append((word, ratio))
        elif ratio >= t.short_local_min:
            local.append((word, ratio))
    ranks = _rank_lookup(doc)
    return KeywordReport(
        mode=MODE_SHORT,
        seed=seed,
        realizations=realizations,
        generator_name=GENERATOR_NAME,
        thresholds=t,
        strong_global=_entries(ranks, global_words),
        weak_global=(),
        local=_entries(ranks, local),
    )


def extract_keywords(
    doc: Document,
    thresholds: Thresholds | None = None,
    mode: str = "auto",
    seed: int = DEFAULT_SEED,
    realizations: int = 1,
) -> KeywordReport:
    """Run the full classification, picking the mode by document length
    unless overridden."""
    t = thresholds or Thresholds()
    if mode == "auto":
        mode = select_mode(doc, t)
    if mode == MODE_LONG:
        return classify_long(doc, t, seed=seed, realizations=realizations)
    if mode == MODE_SHORT:
        return classify_short(doc, t, seed=seed, realizations=realizations)
    raise ValidationError(f"unknown mode {mode!r}")


@dataclass(frozen=True)
class ExtremumRecord:
    word: str
    rank: int
    score: float
    kind: str  # "max" or "min"


def local_extrema_diagnostic(
    doc: Document,
    seed: int = DEFAULT_SEED,
    realizations: int = 1,
) -> list[ExtremumRecord]:
    """Words whose second-moment response is a strict local extremum along the
    frequency-rank ordering. A diagnostic for short documents where the bucket
    thresholds separate poorly; not merged into classification."""
    scores = score_all_words(doc, seed=seed, realizations=realizations)
    ranked = [
        (word, rank)
        for word, _, rank in rank_frequency_table(doc)
        if word in scores
    ]
    if len(ranked) < 3:
        raise UndefinedStatisticError(
            "local extrema need at least three words with two occurrences"
        )
    series = [scores[word].second_moment_ratio for word, _ in ranked]
    out = []
    for i in range(1, len(series) - 1):
        prev, here, nxt = series[i - 1], series[i], series[i + 1]
        if prev < here > nxt:
            kind = "max"
        elif prev > here < nxt:
            kind = "min"
        else:
            continue
        word, rank = ranked[i]
        out.append(ExtremumRecord(word=word, rank=rank, score=here, kind=kind))
    return out
