"""End-to-end command-line workflows in a temporary output directory."""

from __future__ import annotations

import json
import re

import pytest

from claimlab.cli import main

TINY_TRAIN = [
    "--epochs", "2", "--batch-size", "8",
    "--embed-dim", "6", "--hidden-dim", "8", "--attn-dim", "4",
    "--emo-dim", "4", "--oov-buckets", "8",
]


def run(argv: list[str]) -> int:
    return main(argv)


@pytest.fixture()
def corpus(tmp_path) -> str:
    out = tmp_path / "synth_out"
    code = run(["--seed", "3", "--out", str(out), "synth", "--n", "45"])
    assert code == 0
    return str(out / "synthetic.jsonl")


class TestSynthAndIngest:
    """Corpus generation, validation, and statistics."""

    def test_synth_writes_corpus(self, tmp_path, capsys):
        out = tmp_path / "o"
        assert run(["--seed", "3", "--out", str(out), "synth", "--n", "45"]) == 0
        captured = capsys.readouterr()
        assert "generated 45 synthetic records" in captured.out
        assert (out / "synthetic.jsonl").exists()
        assert (out / "config.json").exists()

    def test_ingest_counts_and_stats(self, corpus, tmp_path, capsys):
        out = tmp_path / "o"
        assert run(["--out", str(out), "ingest", corpus, "--stats"]) == 0
        captured = capsys.readouterr()
        assert "ingested 45 records" in captured.out
        assert "FALSE=15" in captured.out
        assert "MIXTURE=15" in captured.out
        assert "TRUE=15" in captured.out
        assert "sources: synthetic=45" in captured.out
        assert (out / "normalized.jsonl").exists()

    def test_ingest_does_not_mutate_input(self, corpus, tmp_path):
        from pathlib import Path

        before = Path(corpus).read_bytes()
        assert run(["--out", str(tmp_path / "o"), "ingest", corpus]) == 0
        assert Path(corpus).read_bytes() == before

    def test_ingest_bad_line_reports_line_number(self, tmp_path, capsys):
        bad = tmp_path / "bad.jsonl"
        bad.write_text(
            '{"id":"a","claim":"c","label":"true","source":"snopes","snippets":[]}\n'
            "{broken\n",
            encoding="utf-8",
        )
        code = run(["--out", str(tmp_path / "o"), "ingest", str(bad)])
        assert code == 1
        captured = capsys.readouterr()
        assert "error:" in captured.err
        assert "line 2" in captured.err

    def test_missing_corpus_is_a_clean_error(self, tmp_path, capsys):
        code = run(["--out", str(tmp_path / "o"), "ingest", str(tmp_path / "nope.jsonl")])
        assert code == 1
        captured = capsys.readouterr()
        assert captured.err.startswith("error:")
        assert "nope.jsonl" in captured.err


class TestPreprocess:
    """Pipeline application over claims, evidence, or both."""

    def test_preprocess_writes_transformed_corpus(self, corpus, tmp_path, capsys):
        out = tmp_path / "o"
        assert run(["--out", str(out), "preprocess", corpus, "--pipeline", "stop,stem"]) == 0
        target = out / "preprocessed.jsonl"
        assert target.exists()
        assert "pipeline [stop,stem]" in capsys.readouterr().out

    def test_idempotent_rerun_overwrites_identically(self, corpus, tmp_path):
        out = tmp_path / "o"
        args = ["--out", str(out), "preprocess", corpus, "--pipeline", "stop"]
        assert run(args) == 0
        first = (out / "preprocessed.jsonl").read_bytes()
        assert run(args) == 0
        assert (out / "preprocessed.jsonl").read_bytes() == first

    def test_restrict_claim_leaves_snippets(self, corpus, tmp_path):
        out = tmp_path / "o"
        assert run(
            ["--out", str(out), "preprocess", corpus, "--pipeline", "stem", "--restrict", "claim"]
        ) == 0
        lines = (out / "preprocessed.jsonl").read_text(encoding="utf-8").splitlines()
        with open(corpus, encoding="utf-8") as fh:
            orig = [json.loads(line) for line in fh]
        new = [json.loads(line) for line in lines]
        assert all(a["snippets"] == b["snippets"] for a, b in zip(orig, new))
        assert any(a["claim"] != b["claim"] for a, b in zip(orig, new))

    def test_unknown_step_is_usage_error(self, corpus, tmp_path, capsys):
        with pytest.raises(SystemExit) as err:
            run(["--out", str(tmp_path / "o"), "preprocess", corpus, "--pipeline", "lemmatize"])
        assert err.value.code == 2
        captured = capsys.readouterr()
        for name in ("neg", "pos", "stop", "stem"):
            assert name in captured.err


class TestTrainEvalAblate:
    """Model-producing commands and their artifacts."""

    def test_train_writes_checkpoint_and_history(self, corpus, tmp_path, capsys):
        out = tmp_path / "o"
        assert run(["--seed", "3", "--out", str(out), "train", corpus, *TINY_TRAIN]) == 0
        assert (out / "checkpoints" / "model.ckpt").exists()
        history = json.loads((out / "reports" / "history.json").read_text(encoding="utf-8"))
        assert len(history) == 2
        assert {"epoch", "train_loss", "dev_f1"} == set(history[0])
        assert "best dev macro-F1" in capsys.readouterr().out

    def test_repeated_train_identical_checkpoint(self, corpus, tmp_path):
        out_a = tmp_path / "a"
        out_b = tmp_path / "b"
        assert run(["--seed", "3", "--out", str(out_a), "train", corpus, *TINY_TRAIN]) == 0
        assert run(["--seed", "3", "--out", str(out_b), "train", corpus, *TINY_TRAIN]) == 0
        a = (out_a / "checkpoints" / "model.ckpt").read_bytes()
        b = (out_b / "checkpoints" / "model.ckpt").read_bytes()
        assert a == b

    def test_eval_prints_delta_line(self, corpus, tmp_path, capsys):
        out = tmp_path / "o"
        assert run(["--seed", "3", "--out", str(out), "eval", corpus, *TINY_TRAIN]) == 0
        captured = capsys.readouterr()
        assert re.search(r"f1_ce=\d\.\d{4} f1_e=\d\.\d{4} delta=-?\d\.\d{4}", captured.out)
        report = (out / "reports" / "experiment.csv").read_text(encoding="utf-8")
        assert report.startswith("dataset,pipeline,emotion_mode,snippet_count,seed,f1_ce,f1_e,delta")
        assert len(report.splitlines()) == 2

    def test_eval_missing_lexicon_fails(self, corpus, tmp_path, capsys):
        code = run(
            ["--out", str(tmp_path / "o"), "eval", corpus, "--emotion-mode", "lexi", *TINY_TRAIN]
        )
        assert code == 1
        assert "lexicon" in capsys.readouterr().err

    def test_ablate_rows(self, corpus, tmp_path, capsys):
        out = tmp_path / "o"
        assert run(
            ["--seed", "3", "--out", str(out), "ablate", corpus, "--ks", "3,1", *TINY_TRAIN]
        ) == 0
        report = (out / "reports" / "ablation.csv").read_text(encoding="utf-8")
        lines = report.splitlines()
        assert len(lines) == 3
        assert lines[1].split(",")[3] == "3"
        assert lines[2].split(",")[3] == "1"

    def test_ablate_bad_ks(self, corpus, tmp_path, capsys):
        code = run(["--out", str(tmp_path / "o"), "ablate", corpus, "--ks", "3,x", *TINY_TRAIN])
        assert code == 1
        assert "comma list of integers" in capsys.readouterr().err


class TestMatrix:
    """The pipeline-by-emotion-mode grid command."""

    def test_grid_row_count(self, corpus, tmp_path, capsys):
        out = tmp_path / "o"
        assert run(
            [
                "--seed", "3", "--out", str(out), "matrix", corpus,
                "--pipelines", "none;stop", "--emotion-modes", "none",
                "--epochs", "2", "--batch-size", "8", "--embed-dim", "6",
                "--hidden-dim", "8", "--attn-dim", "4", "--emo-dim", "4",
                "--oov-buckets", "8",
            ]
        ) == 0
        report = (out / "reports" / "matrix.csv").read_text(encoding="utf-8")
        assert len(report.splitlines()) == 3
        assert (out / "reports" / "matrix.txt").exists()

    def test_bad_pipelines_usage_error(self, corpus, tmp_path, capsys):
        with pytest.raises(SystemExit) as err:
            run(["--out", str(tmp_path / "o"), "matrix", corpus, "--pipelines", "none;what"])
        assert err.value.code == 2
        assert "what" in capsys.readouterr().err


class TestConfigResolution:
    """Defaults, config file, and flags merge in rising priority."""

    def test_config_echo_written_first(self, corpus, tmp_path):
        out = tmp_path / "o"
        assert run(["--seed", "5", "--out", str(out), "ingest", corpus]) == 0
        echo = json.loads((out / "config.json").read_text(encoding="utf-8"))
        assert echo["command"] == "ingest"
        assert echo["seed"] == 5

    def test_file_config_used_when_flag_absent(self, corpus, tmp_path):
        cfg = tmp_path / "cfg.json"
        cfg.write_text(json.dumps({"epochs": 3, "batch_size": 8, "embed_dim": 6,
                                   "hidden_dim": 8, "attn_dim": 4, "emo_dim": 4,
                                   "oov_buckets": 8}), encoding="utf-8")
        out = tmp_path / "o"
        assert run(["--out", str(out), "--config", str(cfg), "train", corpus]) == 0
        echo = json.loads((out / "config.json").read_text(encoding="utf-8"))
        assert echo["epochs"] == 3
        history = json.loads((out / "reports" / "history.json").read_text(encoding="utf-8"))
        assert len(history) == 3

    def test_flag_beats_file(self, corpus, tmp_path):
        cfg = tmp_path / "cfg.json"
        cfg.write_text(json.dumps({"epochs": 3, "batch_size": 8, "embed_dim": 6,
                                   "hidden_dim": 8, "attn_dim": 4, "emo_dim": 4,
                                   "oov_buckets": 8}), encoding="utf-8")
        out = tmp_path / "o"
        assert run(
            ["--out", str(out), "--config", str(cfg), "train", corpus, "--epochs", "2"]
        ) == 0
        echo = json.loads((out / "config.json").read_text(encoding="utf-8"))
        assert echo["epochs"] == 2

    def test_default_when_nothing_given(self, corpus, tmp_path):
        out = tmp_path / "o"
        assert run(["--out", str(out), "ingest", corpus]) == 0
        echo = json.loads((out / "config.json").read_text(encoding="utf-8"))
        assert echo["seed"] == 0

    def test_missing_config_file(self, corpus, tmp_path, capsys):
        code = run(
            ["--out", str(tmp_path / "o"), "--config", str(tmp_path / "nope.json"), "ingest", corpus]
        )
        assert code == 1
        assert "config file not found" in capsys.readouterr().err

    def test_invalid_config_json(self, corpus, tmp_path, capsys):
        cfg = tmp_path / "cfg.json"
        cfg.write_text("{broken", encoding="utf-8")
        code = run(["--out", str(tmp_path / "o"), "--config", str(cfg), "ingest", corpus])
        assert code == 1
        assert "not valid JSON" in capsys.readouterr().err

    def test_run_log_created(self, corpus, tmp_path):
        out = tmp_path / "o"
        assert run(["--out", str(out), "ingest", corpus]) == 0
        log_text = (out / "logs" / "run.log").read_text(encoding="utf-8")
        assert "command ingest" in log_text
