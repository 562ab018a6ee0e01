"""Exception types shared across the package."""


class GapKeywordsError(Exception):
    """Base class for all errors raised by this package."""


class ValidationError(GapKeywordsError, ValueError):
    """Malformed input data (bad chapter breaks, inconsistent annotation sets, ...)."""


class ConfigError(GapKeywordsError, ValueError):
    """Invalid configuration, e.g. a chapter pattern that does not compile."""


class UndefinedStatisticError(GapKeywordsError, ValueError):
    """A gap statistic was requested for a word with fewer than two occurrences."""


class WordNotFoundError(GapKeywordsError, KeyError):
    """The requested word does not occur in the document."""


class UnsupportedDocumentError(GapKeywordsError, ValueError):
    """The document lacks structure the operation needs (e.g. chapters)."""


class UndefinedMetricError(GapKeywordsError, ValueError):
    """An evaluation metric has an empty denominator or degenerate marginals."""
