"""Precision/recall/F1 over extraction outputs and annotation files, plus
chance-corrected inter-annotator agreement and the mean-word-length
diagnostic.

Two annotation protocols are supported. Short texts: annotators produce a
full gold list independently, and candidates are scored against it by
intersection. Long texts (where nobody can enumerate hundreds of keywords a
priori): annotators mark keywords within each method's candidate list and
then finalize a gold list that contains every marked word, so precision is
the marked fraction of candidates and recall the marked share of the final
list. Annotation files are matched case-insensitively after the tokenizer
normalization.
"""

from __future__ import annotations

import csv
import json
import math
import warnings
from collections import Counter
from dataclasses import asdict, dataclass
from pathlib import Path
from typing import Hashable, Iterable, Mapping

from .corpus import TokenizerConfig, normalize_token
from .errors import UndefinedMetricError, ValidationError


@dataclass(frozen=True)
class AnnotationSet:
    """A method's candidate words plus what annotators made of them.

    ``marked`` are the candidates the annotator accepted as keywords; ``full``
    is the annotator's final keyword list, which must contain every marked
    word (it may also hold keywords no method proposed).
    """

    candidates: tuple[str, ...]
    marked: frozenset[str]
    full: frozenset[str]

    def __post_init__(self) -> None:
        cand = set(self.candidates)
        if len(cand) != len(self.candidates):
            raise ValidationError("candidate list contains duplicates")
        if not self.marked <= cand:
            raise ValidationError("marked words must be a subset of the candidates")
        if not self.marked <= self.full:
            raise ValidationError("marked words must appear in the final keyword list")


def precision_recall(
    sets: AnnotationSet, long_text_mode: bool = False
) -> tuple[float, float]:
    """Precision and recall under the protocol matching the text length.

    Short mode scores candidates against the full gold list; long mode uses
    the marked subset as the relevant retrieved set.
    """
    candidates = set(sets.candidates)
    if not candidates:
        raise UndefinedMetricError("precision needs a nonempty candidate list")
    if not sets.full:
        raise UndefinedMetricError("recall needs a nonempty gold keyword list")
    if long_text_mode:
        return len(sets.marked) / len(candidates), len(sets.marked) / len(sets.full)
    hits = len(sets.full & candidates)
    return hits / len(candidates), hits / len(sets.full)


def f1(precision: float, recall: float) -> float:
    """Harmonic mean of precision and recall; 0 (with a warning) when both
    are 0, where the harmonic mean is undefined."""
    if precision < 0 or recall < 0:
        raise ValueError("precision and recall must be non-negative")
    if precision + recall == 0:
        warnings.warn("F1 is undefined for precision = recall = 0; returning 0")
        return 0.0
    return 2.0 * precision * recall / (precision + recall)


def cohens_kappa(
    labels_a: Mapping[str, Hashable], labels_b: Mapping[str, Hashable]
) -> float:
    """Chance-corrected agreement between two labelings of the same items.

    The observed agreement is corrected by the agreement expected from the
    annotators' marginal label distributions. 1 means perfect agreement, 0
    chance-level, negative worse than chance.
    """
    if not labels_a or not labels_b:
        raise UndefinedMetricError("agreement needs nonempty labelings")
    if labels_a.keys() != labels_b.keys():
        raise UndefinedMetricError("labelings must cover the same word set")
    n = len(labels_a)
    observed = sum(labels_a[w] == labels_b[w] for w in labels_a) / n
    marginals_a = Counter(labels_a.values())
    marginals_b = Counter(labels_b.values())
    expected = sum(
        (marginals_a[label] / n) * (marginals_b[label] / n) for label in marginals_a
    )
    if expected == 1.0:
        if observed == 1.0:
            return 1.0
        raise UndefinedMetricError(
            "agreement is undefined: both annotators used a single label"
        )
    return (observed - expected) / (1.0 - expected)


_KAPPA_BANDS = [
    (0.0, "none"),
    (0.2, "slight"),
    (0.4, "fair"),
    (0.6, "moderate"),
    (math.inf, "substantial"),
]


def kappa_band(kappa: float) -> str:
    """Verbal agreement band; boundary values go to the higher band and
    anything from 0.6 up counts as substantial."""
    for upper, band in _KAPPA_BANDS:
        if kappa < upper:
            return band
    return _KAPPA_BANDS[-1][1]


def mean_word_length(words: Iterable[str]) -> float:
    """Arithmetic mean letter count. Longer extracted words tend to be more
    informative content words, so this orders methods without annotators."""
    words = list(words)
    if not words:
        raise UndefinedMetricError("mean word length needs a nonempty list")
    return sum(len(w) for w in words) / len(words)


@dataclass(frozen=True)
class EvalResult:
    precision: float
    recall: float
    f1: float
    kappa: float | None = None
    kappa_band: str | None = None
    mean_letters: float | None = None

    def to_dict(self) -> dict:
        return asdict(self)


def evaluate(sets: AnnotationSet, long_text_mode: bool = False) -> EvalResult:
    """Assemble precision, recall, F1 and the candidate mean word length."""
    precision, recall = precision_recall(sets, long_text_mode)
    return EvalResult(
        precision=precision,
        recall=recall,
        f1=f1(precision, recall),
        mean_letters=mean_word_length(sets.candidates),
    )


def _normalize_all(
    words: Iterable[str], config: TokenizerConfig | None
) -> list[str]:
    out = []
    seen = set()
    for word in words:
        token = normalize_token(str(word), config)
        if token is not None and token not in seen:
            seen.add(token)
            out.append(token)
    return out


def load_annotation_json(
    path: str | Path, config: TokenizerConfig | None = None
) -> AnnotationSet:
    """Read a ``{"candidates": [...], "marked": [...], "full": [...]}`` file,
    normalizing every word like the tokenizer would."""
    with open(path, encoding="utf-8") as fh:
        data = json.load(fh)
    if not isinstance(data, dict):
        raise ValidationError("annotation file must hold a JSON object")
    missing = {"candidates", "marked", "full"} - data.keys()
    if missing:
        raise ValidationError(f"annotation file lacks keys: {sorted(missing)}")
    return AnnotationSet(
        candidates=tuple(_normalize_all(data["candidates"], config)),
        marked=frozenset(_normalize_all(data["marked"], config)),
        full=frozenset(_normalize_all(data["full"], config)),
    )


def load_labels_csv(
    path: str | Path, config: TokenizerConfig | None = None
) -> dict[str, str]:
    """Read a two-column ``word,label`` file (header row optional) into a
    word -> label mapping."""
    labels: dict[str, str] = {}
    with open(path, encoding="utf-8", newline="") as fh:
        for i, row in enumerate(csv.reader(fh)):
            if not row or (i == 0 and [c.strip().lower() for c in row] == ["word", "label"]):
                continue
            if len(row) != 2:
                raise ValidationError(f"{path}: row {i + 1} is not word,label")
            word = normalize_token(row[0], config)
            if word is None:
                raise ValidationError(f"{path}: row {i + 1} has no word")
            labels[word] = row[1].strip()
    return labels
