"""Shared exception types raised across the package."""

from __future__ import annotations


class ClaimlabError(Exception):
    """Base class for all package-specific failures."""


class CorpusFormatError(ClaimlabError):
    """A corpus file violates the record schema."""


class LexiconFormatError(ClaimlabError):
    """A lexicon or resource file cannot be parsed."""


class ConfigurationError(ClaimlabError):
    """Requested work is missing a required resource or setting."""


class TrainingDivergedError(ClaimlabError):
    """The training loss stopped being finite."""


class CheckpointFormatError(ClaimlabError):
    """A checkpoint file is unreadable or has an unsupported version."""
