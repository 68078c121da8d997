"""Command-line front door for the claim/evidence laboratory.

Subcommands cover the full workflow: ingest and validate a corpus,
preprocess it through a transform pipeline, generate a synthetic corpus,
train a single model, run the paired claim+evidence / evidence-only
experiment, sweep snippet-count ablations, and run a full pipeline by
emotion-mode matrix.

Settings resolve in three layers: built-in defaults, then a JSON config
file given with --config, then explicit command-line flags. The fully
resolved configuration is echoed to <out>/config.json before any work
starts, and every command writes into the same layout:

    <out>/config.json   resolved settings for this run
    <out>/checkpoints/  trained model binaries
    <out>/reports/      CSV and text reports, training history
    <out>/logs/         run log
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from .corpus import ClaimRecord, Snippet, emit, generate_synthetic, ingest, split
from .emolex import EmotionMode, load_lexicon
from .errors import ClaimlabError, ConfigurationError
from .evaluate import (
    ablation_sweep,
    experiment_matrix,
    render_report_csv,
    render_report_text,
    run_experiment,
)
from .model import InputMode, TrainConfig, save_checkpoint, train
from .preprocess import Resources, parse_pipeline, parse_pipelines, run_pipeline

_DEFAULTS: dict = {
    "seed": 0,
    "out": "claimlab_out",
    "pipeline": "none",
    "pipelines": "none",
    "emotion_mode": "none",
    "emotion_modes": "none",
    "restrict": "both",
    "n": 300,
    "vocab_size": 40,
    "ks": "10,7,4,1",
    "epochs": 200,
    "batch_size": 16,
    "learning_rate": 1e-3,
    "l2": 1e-5,
    "embed_dim": 64,
    "hidden_dim": 64,
    "attn_dim": 32,
    "emo_dim": 16,
    "oov_buckets": 1024,
    "mode": "claim_and_evidence",
    "lexicon": None,
    "stats": False,
    "dataset_name": "corpus",
}

_VALID_STEPS = "neg, pos, stop, stem"

log = logging.getLogger(__name__)


def _pipeline_arg(text: str) -> str:
    """Validate a single pipeline spec at parse time; keep the raw string."""
    try:
        parse_pipeline(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None
    return text


def _pipelines_arg(text: str) -> str:
    try:
        parse_pipelines(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None
    return text


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="claimlab",
        description="Claim/evidence classification laboratory.",
    )
    parser.add_argument("--seed", type=int, default=None, help="random seed (default 0)")
    parser.add_argument("--out", default=None, help="output directory (default claimlab_out)")
    parser.add_argument("--config", default=None, help="JSON config file; flags override it")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def add_train_flags(p: argparse.ArgumentParser) -> None:
        p.add_argument("--pipeline", type=_pipeline_arg, default=None,
                       help=f"comma-joined steps from: {_VALID_STEPS}; 'none' for raw text")
        p.add_argument("--emotion-mode", dest="emotion_mode", default=None,
                       help="none, lexi, or int")
        p.add_argument("--lexicon", default=None,
                       help="affect lexicon TSV; required when --emotion-mode is not none")
        p.add_argument("--epochs", type=int, default=None)
        p.add_argument("--batch-size", dest="batch_size", type=int, default=None)
        p.add_argument("--learning-rate", dest="learning_rate", type=float, default=None)
        p.add_argument("--l2", type=float, default=None)
        p.add_argument("--embed-dim", dest="embed_dim", type=int, default=None)
        p.add_argument("--hidden-dim", dest="hidden_dim", type=int, default=None)
        p.add_argument("--attn-dim", dest="attn_dim", type=int, default=None)
        p.add_argument("--emo-dim", dest="emo_dim", type=int, default=None)
        p.add_argument("--oov-buckets", dest="oov_buckets", type=int, default=None)
        p.add_argument("--dataset-name", dest="dataset_name", default=None)

    p_ingest = sub.add_parser("ingest", help="validate a corpus and write a normalized copy")
    p_ingest.add_argument("corpus", help="JSONL corpus path")
    p_ingest.add_argument("--stats", action="store_true", help="print label/source histograms")
    p_ingest.set_defaults(func=cmd_ingest)

    p_pre = sub.add_parser("preprocess", help="run a transform pipeline over a corpus")
    p_pre.add_argument("corpus", help="JSONL corpus path")
    p_pre.add_argument("--pipeline", type=_pipeline_arg, default=None,
                       help=f"comma-joined steps from: {_VALID_STEPS}; 'none' for raw text")
    p_pre.add_argument("--restrict", choices=("claim", "evidence", "both"), default=None,
                       help="which texts to transform (default both)")
    p_pre.set_defaults(func=cmd_preprocess)

    p_synth = sub.add_parser("synth", help="generate a synthetic corpus")
    p_synth.add_argument("--n", type=int, default=None, help="number of records (default 300)")
    p_synth.add_argument("--vocab-size", dest="vocab_size", type=int, default=None,
                         help="approximate distinct-word budget (default 40)")
    p_synth.set_defaults(func=cmd_synth)

    p_train = sub.add_parser("train", help="train one model and save a checkpoint")
    p_train.add_argument("corpus", help="JSONL corpus path")
    p_train.add_argument("--mode", default=None,
                         help="claim_and_evidence, evidence_only, or claim_only")
    add_train_flags(p_train)
    p_train.set_defaults(func=cmd_train)

    p_eval = sub.add_parser("eval", help="paired claim+evidence / evidence-only experiment")
    p_eval.add_argument("corpus", help="JSONL corpus path")
    add_train_flags(p_eval)
    p_eval.set_defaults(func=cmd_eval)

    p_ablate = sub.add_parser("ablate", help="sweep snippet-count truncations")
    p_ablate.add_argument("corpus", help="JSONL corpus path")
    p_ablate.add_argument("--ks", default=None, help="comma list of snippet counts (default 10,7,4,1)")
    add_train_flags(p_ablate)
    p_ablate.set_defaults(func=cmd_ablate)

    p_matrix = sub.add_parser("matrix", help="pipeline-by-emotion-mode experiment grid")
    p_matrix.add_argument("corpus", help="JSONL corpus path")
    p_matrix.add_argument("--pipelines", type=_pipelines_arg, default=None,
                          help="semicolon-separated pipelines, commas within each")
    p_matrix.add_argument("--emotion-modes", dest="emotion_modes", default=None,
                          help="comma list from: none, lexi, int")
    p_matrix.add_argument("--lexicon", default=None)
    p_matrix.add_argument("--epochs", type=int, default=None)
    p_matrix.add_argument("--batch-size", dest="batch_size", type=int, default=None)
    p_matrix.add_argument("--learning-rate", dest="learning_rate", type=float, default=None)
    p_matrix.add_argument("--l2", type=float, default=None)
    p_matrix.add_argument("--embed-dim", dest="embed_dim", type=int, default=None)
    p_matrix.add_argument("--hidden-dim", dest="hidden_dim", type=int, default=None)
    p_matrix.add_argument("--attn-dim", dest="attn_dim", type=int, default=None)
    p_matrix.add_argument("--emo-dim", dest="emo_dim", type=int, default=None)
    p_matrix.add_argument("--oov-buckets", dest="oov_buckets", type=int, default=None)
    p_matrix.add_argument("--dataset-name", dest="dataset_name", default=None)
    p_matrix.set_defaults(func=cmd_matrix)

    return parser


def resolve_config(args: argparse.Namespace) -> dict:
    """Merge defaults, the JSON config file, and explicit flags (in that order)."""
    file_cfg: dict = {}
    if args.config is not None:
        path = Path(args.config)
        if not path.is_file():
            raise ConfigurationError(f"config file not found: {path}")
        try:
            file_cfg = json.loads(path.read_text(encoding="utf-8"))
        except json.JSONDecodeError as exc:
            raise ConfigurationError(f"config file {path} is not valid JSON: {exc}") from None
        if not isinstance(file_cfg, dict):
            raise ConfigurationError(f"config file {path} must hold a JSON object")
    resolved: dict = {"command": args.command}
    for key, value in vars(args).items():
        if key in ("func", "config", "command"):
            continue
        if value is not None and value is not False:
            resolved[key] = value
        elif key in file_cfg:
            resolved[key] = file_cfg[key]
        elif key in _DEFAULTS:
            resolved[key] = _DEFAULTS[key]
        else:
            resolved[key] = value
    return resolved


def prepare_out(cfg: dict) -> Path:
    """Create the output layout and echo the resolved config before work."""
    out = Path(cfg["out"])
    for sub in ("checkpoints", "reports", "logs"):
        (out / sub).mkdir(parents=True, exist_ok=True)
    echo = {k: (str(v) if isinstance(v, Path) else v) for k, v in cfg.items()}
    (out / "config.json").write_text(
        json.dumps(echo, indent=2, sort_keys=True) + "\n", encoding="utf-8"
    )
    root = logging.getLogger("claimlab")
    for old in [h for h in root.handlers if isinstance(h, logging.FileHandler)]:
        root.removeHandler(old)
        old.close()
    handler = logging.FileHandler(out / "logs" / "run.log", encoding="utf-8")
    handler.setFormatter(logging.Formatter("%(asctime)s %(name)s %(levelname)s %(message)s"))
    root.setLevel(logging.INFO)
    root.addHandler(handler)
    return out


def _train_config(cfg: dict, mode: InputMode | None = None) -> TrainConfig:
    return TrainConfig(
        epochs=int(cfg["epochs"]),
        batch_size=int(cfg["batch_size"]),
        learning_rate=float(cfg["learning_rate"]),
        seed=int(cfg["seed"]),
        mode=mode if mode is not None else InputMode.parse(str(cfg.get("mode", "claim_and_evidence"))),
        emotion_mode=EmotionMode.parse(str(cfg.get("emotion_mode", "none"))),
        hidden_dim=int(cfg["hidden_dim"]),
        attn_dim=int(cfg["attn_dim"]),
        emo_dim=int(cfg["emo_dim"]),
        embed_dim=int(cfg["embed_dim"]),
        oov_buckets=int(cfg["oov_buckets"]),
        l2=float(cfg["l2"]),
    )


def _load_lexicon_if_needed(cfg: dict, emotion_mode: EmotionMode):
    if emotion_mode is EmotionMode.NONE:
        return None
    if not cfg.get("lexicon"):
        raise ConfigurationError(
            f"emotion mode {emotion_mode.value!r} requires --lexicon (no default is assumed)"
        )
    return load_lexicon(cfg["lexicon"])


def cmd_ingest(cfg: dict, out: Path) -> int:
    records = ingest(cfg["corpus"])
    target = out / "normalized.jsonl"
    emit(records, target)
    print(f"ingested {len(records)} records from {cfg['corpus']}")
    print(f"normalized copy written to {target}")
    if cfg["stats"]:
        by_label: dict[str, int] = {}
        by_raw: dict[str, int] = {}
        by_source: dict[str, int] = {}
        snippet_counts = []
        for r in records:
            by_label[r.label.name] = by_label.get(r.label.name, 0) + 1
            by_raw[r.raw_label.value] = by_raw.get(r.raw_label.value, 0) + 1
            by_source[r.source.value] = by_source.get(r.source.value, 0) + 1
            snippet_counts.append(len(r.snippets))
        print("labels: " + " ".join(f"{k}={v}" for k, v in sorted(by_label.items())))
        print("raw labels: " + " ".join(f"{k}={v}" for k, v in sorted(by_raw.items())))
        print("sources: " + " ".join(f"{k}={v}" for k, v in sorted(by_source.items())))
        print(
            f"snippets per record: min={min(snippet_counts)} "
            f"mean={sum(snippet_counts) / len(snippet_counts):.2f} max={max(snippet_counts)}"
        )
    return 0


def cmd_preprocess(cfg: dict, out: Path) -> int:
    records = ingest(cfg["corpus"])
    pipeline = parse_pipeline(str(cfg["pipeline"]))
    resources = Resources.bundled()
    restrict = cfg["restrict"]
    transformed = []
    for r in records:
        claim = r.claim_text
        if restrict in ("claim", "both"):
            claim = run_pipeline(claim, pipeline, resources)
        snippets = []
        for sn in r.snippets:
            text = sn.text
            if restrict in ("evidence", "both"):
                text = run_pipeline(text, pipeline, resources)
            snippets.append(Snippet(rank=sn.rank, text=text))
        transformed.append(
            ClaimRecord.build(r.id, claim, r.raw_label, snippets, r.source)
        )
    target = out / "preprocessed.jsonl"
    emit(transformed, target)
    print(f"pipeline [{pipeline.name}] over {restrict}: {len(transformed)} records -> {target}")
    return 0


def cmd_synth(cfg: dict, out: Path) -> int:
    records = generate_synthetic(int(cfg["n"]), vocab_size=int(cfg["vocab_size"]), seed=int(cfg["seed"]))
    target = out / "synthetic.jsonl"
    emit(records, target)
    by_label: dict[str, int] = {}
    for r in records:
        by_label[r.label.name] = by_label.get(r.label.name, 0) + 1
    print(f"generated {len(records)} synthetic records -> {target}")
    print("labels: " + " ".join(f"{k}={v}" for k, v in sorted(by_label.items())))
    return 0


def cmd_train(cfg: dict, out: Path) -> int:
    records = ingest(cfg["corpus"])
    dataset = split(records, seed=int(cfg["seed"]))
    config = _train_config(cfg)
    pipeline = parse_pipeline(str(cfg["pipeline"]))
    lex = _load_lexicon_if_needed(cfg, config.emotion_mode)
    model, history = train(dataset, lex, pipeline, config)
    ckpt = out / "checkpoints" / "model.ckpt"
    save_checkpoint(ckpt, model)
    (out / "reports" / "history.json").write_text(
        json.dumps(history, indent=2) + "\n", encoding="utf-8"
    )
    best = max(row["dev_f1"] for row in history)
    print(f"trained {config.mode.value} model for {config.epochs} epochs")
    print(f"best dev macro-F1 {best:.4f}; checkpoint -> {ckpt}")
    return 0


def cmd_eval(cfg: dict, out: Path) -> int:
    records = ingest(cfg["corpus"])
    dataset = split(records, seed=int(cfg["seed"]))
    config = _train_config(cfg, mode=InputMode.CLAIM_AND_EVIDENCE)
    pipeline = parse_pipeline(str(cfg["pipeline"]))
    emotion_mode = EmotionMode.parse(str(cfg["emotion_mode"]))
    lex = _load_lexicon_if_needed(cfg, emotion_mode)
    result = run_experiment(
        str(cfg["dataset_name"]), dataset, pipeline, emotion_mode, config, lex=lex
    )
    report = out / "reports" / "experiment.csv"
    report.write_text(render_report_csv([result]), encoding="utf-8")
    print(
        f"f1_ce={result.score_ce:.4f} f1_e={result.score_e:.4f} delta={result.delta:.4f}"
    )
    print(f"report -> {report}")
    return 0


def cmd_ablate(cfg: dict, out: Path) -> int:
    records = ingest(cfg["corpus"])
    dataset = split(records, seed=int(cfg["seed"]))
    config = _train_config(cfg, mode=InputMode.CLAIM_AND_EVIDENCE)
    pipeline = parse_pipeline(str(cfg["pipeline"]))
    emotion_mode = EmotionMode.parse(str(cfg["emotion_mode"]))
    lex = _load_lexicon_if_needed(cfg, emotion_mode)
    try:
        ks = [int(part) for part in str(cfg["ks"]).split(",") if part.strip()]
    except ValueError:
        raise ConfigurationError(f"--ks must be a comma list of integers, got {cfg['ks']!r}")
    results = ablation_sweep(
        str(cfg["dataset_name"]), dataset, pipeline, emotion_mode, config, ks, lex=lex
    )
    report = out / "reports" / "ablation.csv"
    report.write_text(render_report_csv(results), encoding="utf-8")
    print(render_report_text(results), end="")
    print(f"report -> {report}")
    return 0


def cmd_matrix(cfg: dict, out: Path) -> int:
    records = ingest(cfg["corpus"])
    dataset = split(records, seed=int(cfg["seed"]))
    config = _train_config(cfg, mode=InputMode.CLAIM_AND_EVIDENCE)
    pipelines = parse_pipelines(str(cfg["pipelines"]))
    modes = [EmotionMode.parse(part) for part in str(cfg["emotion_modes"]).split(",") if part.strip()]
    needs_lexicon = any(m is not EmotionMode.NONE for m in modes)
    lex = _load_lexicon_if_needed(cfg, EmotionMode.LEXI if needs_lexicon else EmotionMode.NONE)
    report = experiment_matrix(
        str(cfg["dataset_name"]), dataset, pipelines, modes, config, lex=lex
    )
    csv_path = out / "reports" / "matrix.csv"
    csv_path.write_text(render_report_csv(report.results), encoding="utf-8")
    text = render_report_text(report.results)
    (out / "reports" / "matrix.txt").write_text(text, encoding="utf-8")
    print(text, end="")
    print(f"report -> {csv_path}")
    if report.failures:
        for failure in report.failures:
            print(
                f"cell failed: pipeline=[{failure.pipeline}] "
                f"emotion={failure.emotion_mode.value}: {failure.error}",
                file=sys.stderr,
            )
        return 1
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = resolve_config(args)
        out = prepare_out(cfg)
        log.info("command %s starting", cfg["command"])
        code = args.func(cfg, out)
        log.info("command %s finished with exit code %d", cfg["command"], code)
        return code
    except (ClaimlabError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
