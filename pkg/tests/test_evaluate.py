"""Metrics, the claim-use delta, experiment pairing, and report rendering."""

from __future__ import annotations

import csv
import io
import random

import numpy as np
import pytest

from claimlab.corpus import VeracityLabel, generate_synthetic, split
from claimlab.emolex import EmotionMode
from claimlab.errors import ConfigurationError
from claimlab.evaluate import (
    ExperimentResult,
    confusion_matrix,
    delta,
    experiment_matrix,
    f1_macro,
    render_report_csv,
    render_report_text,
    run_experiment,
    synthetic_benchmark_config,
)
from claimlab.model import TrainConfig
from claimlab.preprocess import Pipeline, parse_pipeline, parse_pipelines

TINY = TrainConfig(
    epochs=2, batch_size=8, seed=3,
    hidden_dim=8, attn_dim=4, emo_dim=4, embed_dim=6, oov_buckets=8,
)


def oracle_f1(preds: list[int], golds: list[int]) -> float:
    """Brute-force macro-F1 by direct per-class counting."""
    scores = []
    for cls in range(3):
        tp = sum(1 for p, g in zip(preds, golds) if p == cls and g == cls)
        fp = sum(1 for p, g in zip(preds, golds) if p == cls and g != cls)
        fn = sum(1 for p, g in zip(preds, golds) if p != cls and g == cls)
        precision = tp / (tp + fp) if tp + fp else 0.0
        recall = tp / (tp + fn) if tp + fn else 0.0
        scores.append(
            2 * precision * recall / (precision + recall) if precision + recall else 0.0
        )
    return sum(scores) / 3


class TestConfusionMatrix:
    """Count matrix layout: rows are gold, columns are predicted."""

    def test_layout(self):
        matrix = confusion_matrix([0, 1, 2, 0], [0, 1, 1, 2])
        expected = np.zeros((3, 3), dtype=np.int64)
        expected[0, 0] = 1
        expected[1, 1] = 1
        expected[1, 2] = 1
        expected[2, 0] = 1
        assert np.array_equal(matrix, expected)

    def test_accepts_labels_and_ints(self):
        as_enum = confusion_matrix(
            [VeracityLabel.TRUE, VeracityLabel.FALSE], [VeracityLabel.TRUE, VeracityLabel.TRUE]
        )
        as_int = confusion_matrix([2, 0], [2, 2])
        assert np.array_equal(as_enum, as_int)

    def test_length_mismatch(self):
        with pytest.raises(ValueError, match="mismatch"):
            confusion_matrix([0, 1], [0])

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            confusion_matrix([], [])


class TestF1Macro:
    """Agreement with the brute-force oracle and pinned conventions."""

    def test_thousand_random_cases(self):
        rng = random.Random(501)
        for _ in range(1000):
            n = rng.randint(1, 30)
            preds = [rng.randint(0, 2) for _ in range(n)]
            golds = [rng.randint(0, 2) for _ in range(n)]
            assert f1_macro(preds, golds) == pytest.approx(oracle_f1(preds, golds), abs=1e-12)

    def test_balanced_golds_constant_prediction(self):
        golds = [0, 1, 2] * 10
        preds = [0] * 30
        # Per-class F1 is (1/2, 0, 0): macro-F1 = 1/6.
        assert abs(f1_macro(preds, golds) - 1 / 6) <= 1e-12

    def test_perfect_prediction(self):
        golds = [0, 1, 2, 1]
        assert f1_macro(golds, golds) == 1.0

    def test_absent_class_counts_as_zero(self):
        # Only two classes present and predicted perfectly: mean over all
        # three classes is 2/3, not 1.
        preds = [0, 1, 0, 1]
        golds = [0, 1, 0, 1]
        assert np.isclose(f1_macro(preds, golds), 2 / 3)


class TestDelta:
    """The claim-use diagnostic and its bounds checking."""

    def test_published_rows(self):
        assert abs(delta(0.344, 0.306) - 0.038) <= 1e-12
        assert abs(delta(0.295, 0.298) - (-0.003)) <= 1e-12

    def test_bounds_validation(self):
        with pytest.raises(ValueError, match="score_ce"):
            delta(1.2, 0.5)
        with pytest.raises(ValueError, match="score_e"):
            delta(0.5, -0.1)

    def test_result_consistency_enforced(self):
        with pytest.raises(ValueError, match="inconsistent"):
            ExperimentResult(
                dataset="d", pipeline="none", emotion_mode=EmotionMode.NONE,
                snippet_count=10, seed=0, score_ce=0.5, score_e=0.4, delta=0.2,
            )

    def test_benchmark_config_seed_passthrough(self):
        config = synthetic_benchmark_config(seed=13)
        assert config.seed == 13


class TestRunExperiment:
    """The paired run trains two models that differ only in input mode."""

    def test_pair_on_tiny_corpus(self):
        dataset = split(generate_synthetic(n=45, seed=3), seed=3)
        result = run_experiment("tiny", dataset, Pipeline(), EmotionMode.NONE, TINY)
        assert result.dataset == "tiny"
        assert result.pipeline == "none"
        assert result.snippet_count == 10
        assert result.seed == TINY.seed
        assert 0.0 <= result.score_ce <= 1.0
        assert 0.0 <= result.score_e <= 1.0
        assert result.delta == pytest.approx(result.score_ce - result.score_e, abs=1e-12)

    def test_deterministic(self):
        dataset = split(generate_synthetic(n=45, seed=3), seed=3)
        a = run_experiment("tiny", dataset, Pipeline(), EmotionMode.NONE, TINY)
        b = run_experiment("tiny", dataset, Pipeline(), EmotionMode.NONE, TINY)
        assert a == b

    def test_emotion_mode_without_lexicon_rejected(self):
        dataset = split(generate_synthetic(n=45, seed=3), seed=3)
        with pytest.raises(ConfigurationError, match="lexicon"):
            run_experiment("tiny", dataset, Pipeline(), EmotionMode.LEXI, TINY)

    def test_empty_test_split_rejected(self):
        dataset = split(generate_synthetic(n=45, seed=3), seed=3)
        broken = type(dataset)(train=dataset.train, dev=dataset.dev, test=(), seed=3)
        with pytest.raises(ConfigurationError, match="test"):
            run_experiment("tiny", broken, Pipeline(), EmotionMode.NONE, TINY)


class TestMatrix:
    """Grid execution with per-cell failure capture and sorted results."""

    def test_rows_and_sorting(self):
        dataset = split(generate_synthetic(n=45, seed=3), seed=3)
        report = experiment_matrix(
            "tiny", dataset, parse_pipelines("none;stop"), [EmotionMode.NONE], TINY
        )
        assert len(report.results) == 2
        assert report.failures == ()
        deltas = [r.delta for r in report.results]
        assert deltas == sorted(deltas, reverse=True)

    def test_failures_captured_per_cell(self):
        dataset = split(generate_synthetic(n=45, seed=3), seed=3)
        report = experiment_matrix(
            "tiny", dataset, [parse_pipeline("none")],
            [EmotionMode.NONE, EmotionMode.LEXI], TINY, lex=None,
        )
        assert len(report.results) == 1
        assert len(report.failures) == 1
        assert report.failures[0].emotion_mode is EmotionMode.LEXI
        assert "lexicon" in report.failures[0].error

    def test_empty_grid_rejected(self):
        dataset = split(generate_synthetic(n=45, seed=3), seed=3)
        with pytest.raises(ConfigurationError):
            experiment_matrix("tiny", dataset, [], [EmotionMode.NONE], TINY)
        with pytest.raises(ConfigurationError):
            experiment_matrix("tiny", dataset, [Pipeline()], [], TINY)


class TestReports:
    """CSV and text rendering of result rows."""

    RESULT = ExperimentResult(
        dataset="snopes", pipeline="pos,stop", emotion_mode=EmotionMode.INT,
        snippet_count=10, seed=7, score_ce=0.344, score_e=0.306,
        delta=0.344 - 0.306,
    )

    def test_csv_header_and_quoting(self):
        text = render_report_csv([self.RESULT])
        lines = text.splitlines()
        assert lines[0] == "dataset,pipeline,emotion_mode,snippet_count,seed,f1_ce,f1_e,delta"
        # The pipeline name contains a comma and must arrive quoted.
        assert '"pos,stop"' in lines[1]

    def test_csv_round_trip_and_arithmetic(self):
        text = render_report_csv([self.RESULT])
        rows = list(csv.DictReader(io.StringIO(text)))
        assert len(rows) == 1
        row = rows[0]
        assert row["pipeline"] == "pos,stop"
        assert row["emotion_mode"] == "int"
        assert float(row["delta"]) == pytest.approx(
            float(row["f1_ce"]) - float(row["f1_e"]), abs=1e-4
        )
        assert row["f1_ce"] == "0.3440"

    def test_text_report_aligned(self):
        text = render_report_text([self.RESULT])
        lines = text.splitlines()
        assert lines[0].startswith("dataset")
        assert "0.3440" in lines[1]
        assert text.endswith("\n")
