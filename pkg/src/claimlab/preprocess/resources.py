"""Loaders for the bundled preprocessing resources.

Three flat files ship inside the package: a 179-word stoplist (one
lowercase word per line), an antonym map (word<TAB>antonym), and a tagger
lexicon (word<TAB>tag with tags N/V/ADJ/ADV/O). All loaders also accept an
explicit path so user-supplied replacements drop in without code changes.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from importlib import resources as importlib_resources
from pathlib import Path

from ..errors import LexiconFormatError
from .tokenizer import Tag

_TAG_BY_CODE = {tag.value: tag for tag in Tag}


def bundled_data_path(name: str) -> Path:
    """Filesystem path of a data file shipped with the package."""
    return Path(str(importlib_resources.files("claimlab").joinpath("data", name)))


def load_stoplist(path: str | Path | None = None) -> frozenset[str]:
    """One lowercase word per line; blank lines ignored."""
    src = Path(path) if path is not None else bundled_data_path("stopwords.txt")
    words = [line.strip() for line in src.read_text(encoding="utf-8").splitlines()]
    return frozenset(w for w in words if w)


def load_antonyms(path: str | Path | None = None) -> dict[str, str]:
    """word<TAB>antonym per line; self-mappings are rejected."""
    src = Path(path) if path is not None else bundled_data_path("antonyms.tsv")
    entries: dict[str, str] = {}
    for n, line in enumerate(src.read_text(encoding="utf-8").splitlines(), start=1):
        if not line.strip():
            continue
        parts = line.split("\t")
        if len(parts) != 2:
            raise LexiconFormatError(f"{src}: line {n}: expected word<TAB>antonym")
        word, antonym = parts[0].strip(), parts[1].strip()
        if not word or not antonym or word == antonym:
            raise LexiconFormatError(f"{src}: line {n}: invalid pair {line!r}")
        entries[word] = antonym
    return entries


def load_tag_lexicon(path: str | Path | None = None) -> dict[str, Tag]:
    """word<TAB>tag per line, tag one of N/V/ADJ/ADV/O."""
    src = Path(path) if path is not None else bundled_data_path("tag_lexicon.tsv")
    entries: dict[str, Tag] = {}
    for n, line in enumerate(src.read_text(encoding="utf-8").splitlines(), start=1):
        if not line.strip():
            continue
        parts = line.split("\t")
        if len(parts) != 2 or parts[1] not in _TAG_BY_CODE:
            raise LexiconFormatError(f"{src}: line {n}: expected word<TAB>{{N,V,ADJ,ADV,O}}")
        entries[parts[0].strip()] = _TAG_BY_CODE[parts[1]]
    return entries


@dataclass(frozen=True)
class Resources:
    """Immutable resource bundle consumed by the transforms."""

    tag_lexicon: dict[str, Tag] = field(repr=False)
    stoplist: frozenset[str] = field(repr=False)
    antonyms: dict[str, str] = field(repr=False)

    @classmethod
    def bundled(cls) -> "Resources":
        return cls(
            tag_lexicon=load_tag_lexicon(),
            stoplist=load_stoplist(),
            antonyms=load_antonyms(),
        )


def mini_affect_lexicon_path() -> Path:
    """Path of the 40-term affect lexicon that ships for tests and demos."""
    return bundled_data_path("mini_affect_lexicon.tsv")
