"""Whitespace tokenizer with punctuation splitting.

Rules, in order, for every whitespace-separated chunk: leading punctuation
characters split off as single-character tokens, then trailing punctuation
likewise, then a terminal "n't" detaches from chunks longer than three
characters so contractions like "don't" become [do, n't]. The tokenizer is
idempotent on its own space-joined output, which lets transforms act on a
canonical token stream.
"""

from __future__ import annotations

import string
from dataclasses import dataclass
from enum import Enum


class Tag(Enum):
    """Coarse part-of-speech tags; values are the lexicon file codes."""

    NOUN = "N"
    VERB = "V"
    ADJECTIVE = "ADJ"
    ADVERB = "ADV"
    OTHER = "O"


@dataclass(frozen=True)
class Token:
    """One surface token; lower is the case-folded surface."""

    surface: str
    lower: str
    tag: Tag | None = None


_PUNCT = set(string.punctuation) | set("“”‘’«»—–…¿¡·")


def _split_chunk(chunk: str) -> list[str]:
    leading: list[str] = []
    while chunk and chunk[0] in _PUNCT:
        leading.append(chunk[0])
        chunk = chunk[1:]
    trailing: list[str] = []
    while chunk and chunk[-1] in _PUNCT:
        trailing.append(chunk[-1])
        chunk = chunk[:-1]
    trailing.reverse()

    core: list[str] = []
    if chunk:
        if len(chunk) > 3 and chunk[-3:].lower() == "n't":
            core = [chunk[:-3], chunk[-3:]]
        else:
            core = [chunk]
    return leading + core + trailing


def tokenize(text: str) -> list[Token]:
    """Split text into untagged tokens."""
    pieces: list[str] = []
    for chunk in text.split():
        pieces.extend(_split_chunk(chunk))
    return [Token(surface=p, lower=p.lower()) for p in pieces]


def detokenize(tokens: list[Token]) -> str:
    """Single-space join of surfaces; spacing fidelity is not a goal."""
    return " ".join(t.surface for t in tokens)
