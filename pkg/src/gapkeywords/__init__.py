"""Corpus-free keyword extraction for a single text.

Words are scored by how the moments of their gap (spacing) distribution
respond to seeded random shuffles of the whole text: spread-out words whose
spacing homogenizes under shuffling are global keywords, clustered words whose
spacing disperses are local ones. Ships a frequency-cutoff baseline, a
chapter-distribution scorer, and an evaluation suite (precision/recall/F1,
inter-annotator agreement).
"""

from .chapters import (
    ChapterHistogram,
    ChapterScoreRecord,
    chapter_entropy_score,
    chapter_histogram,
    chapter_score,
    chapter_table,
    top_by_chapter_score,
)
from .corpus import (
    Document,
    TokenizerConfig,
    build_document,
    default_stopwords_path,
    detect_chapters,
    load_stopwords,
    normalize_token,
    tokenize,
)
from .errors import (
    ConfigError,
    GapKeywordsError,
    UndefinedMetricError,
    UndefinedStatisticError,
    UnsupportedDocumentError,
    ValidationError,
    WordNotFoundError,
)
from .evaluation import (
    AnnotationSet,
    EvalResult,
    cohens_kappa,
    evaluate,
    f1,
    kappa_band,
    load_annotation_json,
    load_labels_csv,
    mean_word_length,
    precision_recall,
)
from .extractor import (
    ExtremumRecord,
    KeywordEntry,
    KeywordReport,
    Thresholds,
    classify_long,
    classify_short,
    extract_keywords,
    local_extrema_diagnostic,
    select_mode,
)
from .gap_stats import (
    GapProfile,
    StatsRecord,
    gap_profile,
    gap_sequence,
    geometric_gap_mean,
    moment,
    ordinary_frequency,
    rank_frequency_table,
    spatial_frequency,
    stats_dump,
    write_stats_csv,
)
from .luhn import LuhnCutoffs, luhn_cutoffs, luhn_extract, zipf_r10
from .permutation import (
    DEFAULT_SEED,
    GENERATOR_NAME,
    PermutationScore,
    permutation_score,
    permute,
    score_all_words,
)

__version__ = "0.1.0"

__all__ = [
    "AnnotationSet",
    "ChapterHistogram",
    "ChapterScoreRecord",
    "ConfigError",
    "DEFAULT_SEED",
    "Document",
    "EvalResult",
    "ExtremumRecord",
    "GENERATOR_NAME",
    "GapKeywordsError",
    "GapProfile",
    "KeywordEntry",
    "KeywordReport",
    "LuhnCutoffs",
    "PermutationScore",
    "StatsRecord",
    "Thresholds",
    "TokenizerConfig",
    "UndefinedMetricError",
    "UndefinedStatisticError",
    "UnsupportedDocumentError",
    "ValidationError",
    "WordNotFoundError",
    "build_document",
    "chapter_entropy_score",
    "chapter_histogram",
    "chapter_score",
    "chapter_table",
    "classify_long",
    "classify_short",
    "cohens_kappa",
    "default_stopwords_path",
    "detect_chapters",
    "evaluate",
    "extract_keywords",
    "f1",
    "gap_profile",
    "gap_sequence",
    "geometric_gap_mean",
    "kappa_band",
    "load_annotation_json",
    "load_labels_csv",
    "load_stopwords",
    "local_extrema_diagnostic",
    "luhn_cutoffs",
    "luhn_extract",
    "mean_word_length",
    "moment",
    "normalize_token",
    "ordinary_frequency",
    "permutation_score",
    "permute",
    "precision_recall",
    "rank_frequency_table",
    "score_all_words",
    "select_mode",
    "spatial_frequency",
    "stats_dump",
    "tokenize",
    "top_by_chapter_score",
    "write_stats_csv",
    "zipf_r10",
]
