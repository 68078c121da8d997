"""Stemmer conformance against the frozen 1,000-word reference fixture."""

from __future__ import annotations

from pathlib import Path

from claimlab.preprocess import stem

FIXTURE = Path(__file__).parent / "data" / "stem_fixture.tsv"


def load_fixture() -> list[tuple[str, str]]:
    pairs = []
    for line in FIXTURE.read_text(encoding="utf-8").splitlines():
        word, expected = line.split("\t")
        pairs.append((word, expected))
    return pairs


class TestFixtureConformance:
    """Every fixture word must stem to its frozen reference output."""

    def test_fixture_size(self):
        assert len(load_fixture()) == 1000

    def test_full_fixture_agreement(self):
        wrong = [
            (word, expected, stem(word))
            for word, expected in load_fixture()
            if stem(word) != expected
        ]
        assert wrong == []


class TestClassicForms:
    """Hand-picked inflections with well-known stems."""

    def test_plural_and_ing_forms(self):
        assert stem("caresses") == "caress"
        assert stem("ponies") == "poni"
        assert stem("cats") == "cat"
        assert stem("motoring") == "motor"
        assert stem("hopping") == "hop"
        assert stem("falling") == "fall"
        assert stem("filing") == "file"

    def test_ed_forms(self):
        assert stem("agreed") == "agre"
        assert stem("plastered") == "plaster"
        assert stem("troubled") == "troubl"
        assert stem("sized") == "size"
        assert stem("tanned") == "tan"

    def test_y_to_i(self):
        assert stem("happy") == "happi"
        assert stem("sky") == "sky"

    def test_derivational_suffixes(self):
        assert stem("relational") == "relat"
        assert stem("conditional") == "condit"
        assert stem("conflated") == "conflat"

    def test_short_words_unchanged(self):
        assert stem("feed") == "feed"
        assert stem("bled") == "bled"
        assert stem("sing") == "sing"


class TestEdgeCases:
    """Degenerate inputs should not crash or grow."""

    def test_one_and_two_letter_words(self):
        assert stem("a") == "a"
        assert stem("is") == "is"

    def test_idempotent_on_fixture_stems(self):
        for _, expected in load_fixture()[:200]:
            assert stem(expected) == stem(stem(expected))
