"""Shared fixtures: bundled resources, the mini affect lexicon, tiny corpora."""

from __future__ import annotations

import pytest

from claimlab.corpus import ClaimRecord, RawLabel, Snippet, Source
from claimlab.emolex import load_lexicon
from claimlab.preprocess import Resources, mini_affect_lexicon_path


@pytest.fixture(scope="session")
def resources() -> Resources:
    return Resources.bundled()


@pytest.fixture(scope="session")
def mini_lexicon():
    return load_lexicon(mini_affect_lexicon_path())


def make_record(
    record_id: str = "r1",
    claim: str = "the sky is blue",
    raw: RawLabel = RawLabel.TRUE,
    snippet_texts: tuple[str, ...] = ("the sky looks blue", "blue sky again"),
    source: Source = Source.SNOPES,
) -> ClaimRecord:
    """One hand-sized record; snippets ranked in the given order."""
    snippets = [Snippet(rank=i, text=t) for i, t in enumerate(snippet_texts, start=1)]
    return ClaimRecord.build(record_id, claim, raw, snippets, source)
