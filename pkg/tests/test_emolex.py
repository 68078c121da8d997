"""Affect lexicon loading and the EmoLexi/EmoInt vector builders."""

from __future__ import annotations

import random

import numpy as np
import pytest

from claimlab.emolex import (
    EMOTION_DIM,
    EMOTIONS,
    EmotionMode,
    emo_int,
    emo_lexi,
    featurize_record,
    load_lexicon,
)
from claimlab.errors import LexiconFormatError
from claimlab.preprocess import parse_pipeline

from conftest import make_record


class TestWorkedExample:
    """The affection/suffering sentence pins the emotion index order."""

    TOKENS = ["he", "had", "an", "affection", "for", "suffering"]

    def test_emo_lexi_counts(self, mini_lexicon):
        expected = np.array([0, 0, 0, 0, 1, 1, 0, 0], dtype=np.float64)
        assert np.allclose(emo_lexi(self.TOKENS, mini_lexicon), expected, atol=1e-9)

    def test_emo_int_intensities(self, mini_lexicon):
        expected = np.array([0, 0, 0, 0, 0.647, 0.844, 0, 0], dtype=np.float64)
        assert np.allclose(emo_int(self.TOKENS, mini_lexicon), expected, atol=1e-9)

    def test_emotion_order(self):
        assert EMOTIONS == (
            "anger", "anticipation", "disgust", "fear",
            "joy", "sadness", "surprise", "trust",
        )
        assert EMOTION_DIM == 8


class TestVectorProperties:
    """Additivity, permutation invariance, and monotonicity."""

    def test_additive_over_concatenation(self, mini_lexicon):
        rng = random.Random(90)
        words = sorted(mini_lexicon.entries) + ["xyzzy", "the", "of"]
        for _ in range(100):
            left = [rng.choice(words) for _ in range(rng.randint(0, 8))]
            right = [rng.choice(words) for _ in range(rng.randint(0, 8))]
            for build in (emo_lexi, emo_int):
                joint = build(left + right, mini_lexicon)
                assert np.allclose(joint, build(left, mini_lexicon) + build(right, mini_lexicon))

    def test_order_invariant(self, mini_lexicon):
        rng = random.Random(91)
        words = sorted(mini_lexicon.entries)
        for _ in range(100):
            tokens = [rng.choice(words) for _ in range(rng.randint(1, 10))]
            shuffled = tokens[:]
            rng.shuffle(shuffled)
            assert np.allclose(emo_lexi(tokens, mini_lexicon), emo_lexi(shuffled, mini_lexicon))
            assert np.allclose(emo_int(tokens, mini_lexicon), emo_int(shuffled, mini_lexicon))

    def test_monotone_under_extension(self, mini_lexicon):
        base = emo_int(["affection"], mini_lexicon)
        extended = emo_int(["affection", "suffering"], mini_lexicon)
        assert (extended >= base - 1e-12).all()

    def test_non_negative_and_int_bounded_by_lexi(self, mini_lexicon):
        rng = random.Random(92)
        words = sorted(mini_lexicon.entries)
        for _ in range(100):
            tokens = [rng.choice(words) for _ in range(rng.randint(0, 12))]
            counts = emo_lexi(tokens, mini_lexicon)
            intensities = emo_int(tokens, mini_lexicon)
            assert (counts >= 0).all() and (intensities >= 0).all()
            # Scores live in [0, 1], so summed intensity never beats the count.
            assert (intensities <= counts + 1e-12).all()

    def test_unknown_tokens_are_zero(self, mini_lexicon):
        assert emo_lexi(["xyzzy", "flurb"], mini_lexicon).sum() == 0.0

    def test_normalize_divides_by_token_count(self, mini_lexicon):
        tokens = ["affection", "the", "the", "the"]
        raw = emo_lexi(tokens, mini_lexicon)
        assert np.allclose(emo_lexi(tokens, mini_lexicon, normalize=True), raw / 4)


class TestLoader:
    """Format errors carry line numbers; duplicates keep the last value."""

    def test_loads_mini_lexicon(self, mini_lexicon):
        assert len(mini_lexicon) == 40
        assert mini_lexicon.duplicate_count == 0

    def test_header_autodetected(self, tmp_path):
        path = tmp_path / "lex.tsv"
        path.write_text("term\temotion\tscore\nrage\tanger\t0.9\n", encoding="utf-8")
        lex = load_lexicon(path)
        assert len(lex) == 1
        assert lex.entries["rage"] == ((0, 0.9),)

    def test_bad_column_count(self, tmp_path):
        path = tmp_path / "lex.tsv"
        path.write_text("rage\tanger\n", encoding="utf-8")
        with pytest.raises(LexiconFormatError, match="line 1"):
            load_lexicon(path)

    def test_unknown_emotion(self, tmp_path):
        path = tmp_path / "lex.tsv"
        path.write_text("rage\tanger\t0.9\nglee\tbliss\t0.5\n", encoding="utf-8")
        with pytest.raises(LexiconFormatError, match="line 2"):
            load_lexicon(path)

    def test_non_numeric_score(self, tmp_path):
        path = tmp_path / "lex.tsv"
        path.write_text("rage\tanger\thigh\n", encoding="utf-8")
        with pytest.raises(LexiconFormatError, match="not a number"):
            load_lexicon(path)

    def test_score_out_of_range(self, tmp_path):
        path = tmp_path / "lex.tsv"
        path.write_text("rage\tanger\t1.5\n", encoding="utf-8")
        with pytest.raises(LexiconFormatError, match="outside"):
            load_lexicon(path)

    def test_duplicates_keep_last_and_count(self, tmp_path, caplog):
        path = tmp_path / "lex.tsv"
        path.write_text("rage\tanger\t0.2\nrage\tanger\t0.8\n", encoding="utf-8")
        with caplog.at_level("WARNING"):
            lex = load_lexicon(path)
        assert lex.entries["rage"] == ((0, 0.8),)
        assert lex.duplicate_count == 1
        assert any("duplicate" in rec.message for rec in caplog.records)

    def test_terms_lowercased(self, tmp_path):
        path = tmp_path / "lex.tsv"
        path.write_text("RAGE\tanger\t0.9\n", encoding="utf-8")
        assert "rage" in load_lexicon(path).entries


class TestFeaturizeRecord:
    """Per-snippet vectors, padded to the ten-snippet frame."""

    def test_shape_and_padding(self, mini_lexicon, resources):
        record = make_record(
            snippet_texts=("he had an affection for suffering", "nothing emotional here")
        )
        feats = featurize_record(
            record, mini_lexicon, EmotionMode.LEXI, parse_pipeline("none"), resources
        )
        assert feats.shape == (10, 8)
        assert np.allclose(feats[0], [0, 0, 0, 0, 1, 1, 0, 0])
        assert feats[2:].sum() == 0.0

    def test_int_mode_uses_intensities(self, mini_lexicon, resources):
        record = make_record(snippet_texts=("he had an affection for suffering",))
        feats = featurize_record(
            record, mini_lexicon, EmotionMode.INT, parse_pipeline("none"), resources
        )
        assert np.allclose(feats[0], [0, 0, 0, 0, 0.647, 0.844, 0, 0], atol=1e-9)

    def test_lookup_happens_before_stemming(self, mini_lexicon, resources):
        # stem("suffering") == "suffer" misses the lexicon key, so the tap
        # must route the unstemmed stream into the lookup.
        record = make_record(snippet_texts=("he had an affection for suffering",))
        feats = featurize_record(
            record, mini_lexicon, EmotionMode.LEXI, parse_pipeline("stem"), resources
        )
        assert np.allclose(feats[0], [0, 0, 0, 0, 1, 1, 0, 0])

    def test_none_mode_rejected(self, mini_lexicon, resources):
        record = make_record()
        with pytest.raises(ValueError):
            featurize_record(
                record, mini_lexicon, EmotionMode.NONE, parse_pipeline("none"), resources
            )


class TestEmotionModeParse:
    """Mode names map one-to-one onto the enum."""

    def test_parse_values(self):
        assert EmotionMode.parse("none") is EmotionMode.NONE
        assert EmotionMode.parse("LEXI") is EmotionMode.LEXI
        assert EmotionMode.parse("int") is EmotionMode.INT

    def test_parse_unknown(self):
        with pytest.raises(ValueError):
            EmotionMode.parse("vibes")
