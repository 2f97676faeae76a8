"""Exception hierarchy shared across the package.

The CLI maps these to exit codes: ConfigError -> 2, input/parse errors -> 3,
TrainingDivergedError -> 4, SeedNotFoundError -> 5.
"""

from __future__ import annotations

__all__ = [
    "LexigrowError",
    "ConfigError",
    "CorpusError",
    "LexiconError",
    "WordNetError",
    "AugmentError",
    "FormatError",
    "TrainingDivergedError",
    "QueryError",
    "SeedNotFoundError",
    "ZeroVectorError",
    "EvalError",
]


class LexigrowError(Exception):
    """Base class for all package errors."""


class ConfigError(LexigrowError):
    """Bad or missing configuration value."""


class CorpusError(LexigrowError):
    """Corpus ingestion failure (bad encoding, unreadable input)."""


class LexiconError(LexigrowError):
    """Concept table parsing or filtering failure."""


class WordNetError(LexigrowError):
    """Database parse or validation failure."""


class AugmentError(LexigrowError):
    """Stream augmentation or reversal failure."""


class FormatError(LexigrowError):
    """A serialized artifact is malformed, truncated, or version-mismatched."""


class TrainingDivergedError(LexigrowError):
    """Loss became non-finite during training."""


class QueryError(LexigrowError):
    """Candidate generation failure."""


class SeedNotFoundError(QueryError):
    """Seed term absent from the trained vocabulary."""


class ZeroVectorError(QueryError):
    """Similarity against an all-zero vector is undefined."""


class EvalError(LexigrowError):
    """Evaluation input inconsistency."""
