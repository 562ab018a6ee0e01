"""Text ingestion: tokenization, stop-word removal, chapter detection, and the
positional index every other module works from.

The toolkit consumes plain UTF-8 text that has already been lemmatized
upstream; lemmatizers are language-specific ecosystem tools and deliberately
out of scope. A standard English stop-word list ships with the package (see
``default_stopwords_path``). Words that occur only once are kept in the
document but are excluded from all gap statistics, which need at least two
occurrences.
"""

from __future__ import annotations

import re
from bisect import bisect_left
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Sequence

import numpy as np

from .errors import ConfigError, ValidationError

# A token is a run of Unicode letters, optionally glued by apostrophes or
# hyphens ("self-possession", "Anna's"). Digits and underscores never belong
# to a token.
_WORD_RE = re.compile(r"[^\W\d_]+(?:['’‐‑-][^\W\d_]+)*")
_JOINER_RE = re.compile(r"['’‐‑-]")


def default_stopwords_path() -> Path:
    """Path of the English stop-word list shipped with the package."""
    return Path(str(resources.files("gapkeywords") / "data" / "stopwords_en.txt"))


def load_stopwords(path: str | Path) -> frozenset[str]:
    """Read a stop-word file: one lowercase word per line, '#' starts a comment."""
    words = set()
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            word = line.split("#", 1)[0].strip()
            if word:
                words.add(word)
    return frozenset(words)


@dataclass(frozen=True)
class TokenizerConfig:
    """Tokenization settings.

    ``strip_punctuation`` controls intra-word apostrophes and hyphens: when
    true (default) they are dropped and the halves joined ("self-possession"
    -> "selfpossession"), when false they are kept inside the token. Stop-word
    filtering happens after that normalization, so the list must contain the
    joined forms ("dont", not "don't").
    """

    lowercase: bool = True
    strip_punctuation: bool = True
    stopword_list: frozenset[str] = frozenset()
    min_token_length: int = 1

    def __post_init__(self) -> None:
        if self.min_token_length < 0:
            raise ConfigError("min_token_length must be non-negative")
        for word in self.stopword_list:
            if not word:
                raise ConfigError("stop-word entries must be nonempty")
            if self.lowercase and word != word.lower():
                raise ConfigError(
                    f"stop-word {word!r} must be lowercase when lowercasing is on"
                )


def _letters_only(token: str) -> str:
    return _JOINER_RE.sub("", token)


def tokenize_with_offsets(
    raw_text: str, config: TokenizerConfig | None = None
) -> list[tuple[str, int]]:
    """Tokenize and keep each surviving token's character offset in the raw text."""
    config = config or TokenizerConfig()
    out: list[tuple[str, int]] = []
    for match in _WORD_RE.finditer(raw_text):
        token = match.group()
        if config.lowercase:
            token = token.lower()
        letters = _letters_only(token)
        if config.strip_punctuation:
            token = letters
        if len(letters) < max(config.min_token_length, 1):
            continue
        if token in config.stopword_list:
            continue
        out.append((token, match.start()))
    return out


def tokenize(raw_text: str, config: TokenizerConfig | None = None) -> list[str]:
    """Split raw text into normalized tokens, dropping stop-words.

    Splits on non-letter boundaries, so digits and punctuation never survive.
    Original token order is preserved.
    """
    return [token for token, _ in tokenize_with_offsets(raw_text, config)]


class Document:
    """Immutable tokenized text with a per-word occurrence-position index.

    Construction is single-threaded; instances are never mutated afterwards
    and are safe for concurrent reads. ``positions`` maps each distinct word
    to the sorted int64 array of its 0-based token indices. ``token_ids`` and
    ``vocab`` give the integer encoding used by the numeric kernels; treat the
    arrays as read-only.
    """

    __slots__ = (
        "tokens",
        "N",
        "N_chap",
        "positions",
        "vocab",
        "word_index",
        "chapter_ids",
        "_token_ids",
        "_chapter_breaks",
    )

    def __init__(
        self, tokens: Sequence[str], chapter_breaks: Sequence[int] = ()
    ) -> None:
        tokens = tuple(tokens)
        n = len(tokens)
        breaks = tuple(int(b) for b in chapter_breaks)
        if any(b2 <= b1 for b1, b2 in zip(breaks, breaks[1:])):
            raise ValidationError("chapter breaks must be strictly increasing")
        if breaks and (breaks[0] < 0 or breaks[-1] >= n):
            raise ValidationError("chapter breaks must lie in [0, number of tokens)")

        word_index: dict[str, int] = {}
        token_ids = np.empty(n, dtype=np.int64)
        position_lists: list[list[int]] = []
        for i, token in enumerate(tokens):
            if not isinstance(token, str) or not token:
                raise ValidationError(f"token {i} is not a nonempty string")
            wid = word_index.setdefault(token, len(position_lists))
            if wid == len(position_lists):
                position_lists.append([])
            token_ids[i] = wid
            position_lists[wid].append(i)

        self.tokens = tokens
        self.N = n
        self.vocab = tuple(word_index)
        self.word_index = word_index
        self.positions = {
            word: np.asarray(position_lists[wid], dtype=np.int64)
            for word, wid in word_index.items()
        }
        self._token_ids = token_ids
        self._chapter_breaks = breaks
        if breaks:
            self.N_chap = len(breaks) + 1
            breaks_arr = np.asarray(breaks, dtype=np.int64)
            self.chapter_ids = (
                np.searchsorted(breaks_arr, np.arange(n), side="right") + 1
            ).astype(np.int64)
        else:
            self.N_chap = 0
            self.chapter_ids = None

    @property
    def token_ids(self) -> np.ndarray:
        return self._token_ids

    def chapter_of(self, index: int) -> int:
        """Chapter id (1-based) of the token at ``index``."""
        if self.chapter_ids is None:
            raise ValidationError("document has no chapter boundaries")
        return int(self.chapter_ids[index])

    def word_count(self, word: str) -> int:
        pos = self.positions.get(word)
        return 0 if pos is None else len(pos)

    def __len__(self) -> int:
        return self.N

    def __repr__(self) -> str:
        return f"Document(N={self.N}, distinct={len(self.vocab)}, N_chap={self.N_chap})"


def build_document(
    tokens: Sequence[str], chapter_breaks: Sequence[int] = ()
) -> Document:
    """Build the positional index over ``tokens``.

    ``chapter_breaks`` are token indices at which a new chapter starts; tokens
    before the first break belong to chapter 1. Without breaks the document has
    no chapters (``N_chap == 0``).
    """
    return Document(tokens, chapter_breaks)


def detect_chapters(
    raw_text: str,
    pattern: str,
    config: TokenizerConfig | None = None,
) -> list[int]:
    """Find chapter starts: the index of the first token after each match of
    ``pattern`` (a regular expression; plain literals work as-is, and
    MULTILINE is on so '^' anchors to line starts).

    Tokens inside the matched delimiter itself stay in the preceding chapter,
    so match the whole heading line (e.g. ``r"^CHAPTER.*$"``) to keep heading
    words out of the following chapter's opening. Must be called with the same
    config later used for :func:`tokenize`, otherwise the indices disagree.
    """
    try:
        rx = re.compile(pattern, re.MULTILINE)
    except re.error as exc:
        raise ConfigError(f"invalid chapter pattern {pattern!r}: {exc}") from exc
    offsets = [offset for _, offset in tokenize_with_offsets(raw_text, config)]
    breaks = set()
    for match in rx.finditer(raw_text):
        idx = bisect_left(offsets, match.end())
        if idx < len(offsets):
            breaks.add(idx)
    return sorted(breaks)


def normalize_token(word: str, config: TokenizerConfig | None = None) -> str | None:
    """Apply the tokenizer normalization (case, joiners) to a standalone word.

    Used when loading annotation files so that annotator spellings match
    document tokens. Stop-word filtering is deliberately not applied. Returns
    None when nothing token-like remains.
    """
    config = config or TokenizerConfig()
    matches = _WORD_RE.findall(word)
    if not matches:
        return None
    token = matches[0]
    if config.lowercase:
        token = token.lower()
    if config.strip_punctuation:
        token = _letters_only(token)
    return token or None
