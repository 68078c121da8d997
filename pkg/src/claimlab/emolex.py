"""Affect-intensity lexicon loading and emotion vector construction.

An affect lexicon maps lowercase terms to (emotion, intensity) pairs over
a fixed eight-emotion index. EmoLexi counts lexicon hits per emotion;
EmoInt sums their intensities. Per-snippet vectors feed the classifier's
emotion-attention branch.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path

import numpy as np

from .corpus import MAX_SNIPPETS, ClaimRecord
from .errors import LexiconFormatError
from .preprocess import Pipeline, Resources, transform_tokens

logger = logging.getLogger(__name__)

# Index order is fixed; vectors, reports, and tests all rely on it.
EMOTIONS = ("anger", "anticipation", "disgust", "fear", "joy", "sadness", "surprise", "trust")
EMOTION_INDEX = {name: i for i, name in enumerate(EMOTIONS)}
EMOTION_DIM = len(EMOTIONS)


class EmotionMode(Enum):
    """How emotion vectors are built; NONE disables the branch."""

    NONE = "none"
    LEXI = "lexi"
    INT = "int"

    @classmethod
    def parse(cls, text: str) -> "EmotionMode":
        for member in cls:
            if member.value == text.lower():
                return member
        raise ValueError(f"unknown emotion mode {text!r}")


@dataclass(frozen=True)
class AffectLexicon:
    """Immutable term -> ((emotion index, intensity), ...) map."""

    entries: dict[str, tuple[tuple[int, float], ...]] = field(repr=False)
    duplicate_count: int = 0

    def __len__(self) -> int:
        return len(self.entries)


def load_lexicon(path: str | Path) -> AffectLexicon:
    """Parse a term<TAB>emotion<TAB>score file; header auto-detected."""
    staging: dict[str, dict[int, float]] = {}
    duplicates = 0
    with open(path, encoding="utf-8") as fh:
        for line_no, line in enumerate(fh, start=1):
            line = line.rstrip("\n")
            if not line.strip():
                continue
            parts = line.split("\t")
            if line_no == 1 and parts and parts[0].strip().lower() == "term":
                continue
            if len(parts) != 3:
                raise LexiconFormatError(
                    f"{path}: line {line_no}: expected term<TAB>emotion<TAB>score"
                )
            term, emotion, raw_score = (p.strip() for p in parts)
            if emotion not in EMOTION_INDEX:
                raise LexiconFormatError(
                    f"{path}: line {line_no}: unknown emotion {emotion!r}"
                )
            try:
                score = float(raw_score)
            except ValueError as exc:
                raise LexiconFormatError(
                    f"{path}: line {line_no}: score {raw_score!r} is not a number"
                ) from exc
            if not 0.0 <= score <= 1.0:
                raise LexiconFormatError(
                    f"{path}: line {line_no}: score {score} outside [0, 1]"
                )
            term = term.lower()
            per_term = staging.setdefault(term, {})
            if EMOTION_INDEX[emotion] in per_term:
                duplicates += 1
            per_term[EMOTION_INDEX[emotion]] = score
    if duplicates:
        logger.warning("%s: %d duplicate (term, emotion) lines; kept the last of each", path, duplicates)
    entries = {
        term: tuple(sorted(pairs.items())) for term, pairs in staging.items()
    }
    return AffectLexicon(entries=entries, duplicate_count=duplicates)


def _accumulate(tokens: list[str], lex: AffectLexicon, use_intensity: bool, normalize: bool) -> np.ndarray:
    vec = np.zeros(EMOTION_DIM, dtype=np.float64)
    for token in tokens:
        for emotion_idx, intensity in lex.entries.get(token, ()):
            vec[emotion_idx] += intensity if use_intensity else 1.0
    if normalize and tokens:
        vec /= len(tokens)
    return vec


def emo_lexi(tokens: list[str], lex: AffectLexicon, normalize: bool = False) -> np.ndarray:
    """Count lexicon hits per emotion over a lowercase token list."""
    return _accumulate(tokens, lex, use_intensity=False, normalize=normalize)


def emo_int(tokens: list[str], lex: AffectLexicon, normalize: bool = False) -> np.ndarray:
    """Sum lexicon intensities per emotion over a lowercase token list."""
    return _accumulate(tokens, lex, use_intensity=True, normalize=normalize)


def featurize_record(
    record: ClaimRecord,
    lex: AffectLexicon,
    mode: EmotionMode,
    pipeline: Pipeline,
    resources: Resources,
) -> np.ndarray:
    """Per-snippet emotion vectors, zero-padded to a (10, 8) array.

    Each snippet runs through the same pipeline as the model's text
    inputs, but lookup happens at the pre-stem tap point because stemming
    destroys lexicon keys.
    """
    if mode is EmotionMode.NONE:
        raise ValueError("featurize_record needs mode LEXI or INT")
    build = emo_int if mode is EmotionMode.INT else emo_lexi
    out = np.zeros((MAX_SNIPPETS, EMOTION_DIM), dtype=np.float64)
    for row, snippet in enumerate(record.snippets):
        run = transform_tokens(snippet.text, pipeline, resources)
        out[row] = build([t.lower for t in run.emotion_tokens], lex)
    return out
