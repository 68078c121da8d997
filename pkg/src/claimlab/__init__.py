"""Claim/evidence classification laboratory.

A compact, fully reproducible stack for studying whether a fake-news
classifier actually reads the claim it is checking: corpus handling with
ranked evidence snippets, affect-reducing text transforms (negation
resolution, content-word filtering, stopword removal, stemming), lexicon
emotion vectors, a dual-attention numpy classifier, and an evaluation
harness built around the claim-use diagnostic

    delta = f1(claim + evidence) - f1(evidence only).
"""

from .corpus import (
    MAX_SNIPPETS,
    ClaimRecord,
    DatasetSplit,
    RawLabel,
    Snippet,
    Source,
    VeracityLabel,
    collapse_label,
    emit,
    generate_synthetic,
    ingest,
    split,
    truncate_snippets,
)
from .emolex import (
    EMOTION_DIM,
    EMOTIONS,
    AffectLexicon,
    EmotionMode,
    emo_int,
    emo_lexi,
    featurize_record,
    load_lexicon,
)
from .errors import (
    CheckpointFormatError,
    ClaimlabError,
    ConfigurationError,
    CorpusFormatError,
    LexiconFormatError,
    TrainingDivergedError,
)
from .evaluate import (
    ExperimentResult,
    MatrixReport,
    ablation_sweep,
    confusion_matrix,
    delta,
    experiment_matrix,
    f1_macro,
    render_report_csv,
    render_report_text,
    run_experiment,
    synthetic_benchmark_config,
)
from .model import (
    TENSOR_ORDER,
    EncoderConfig,
    GradCheckReport,
    InputMode,
    PreparedExample,
    TrainConfig,
    TrainedModel,
    attention_pool,
    build_vocab,
    encode_text,
    forward,
    grad_check,
    init_params,
    load_checkpoint,
    pair_combine,
    predict,
    prepare_dataset,
    prepare_example,
    save_checkpoint,
    train,
)
from .preprocess import (
    Pipeline,
    Resources,
    Tag,
    Token,
    TransformKind,
    detokenize,
    mini_affect_lexicon_path,
    parse_pipeline,
    parse_pipelines,
    run_pipeline,
    stem,
    tag_tokens,
    tokenize,
    transform_tokens,
)

__version__ = "0.1.0"

__all__ = [
    "AffectLexicon",
    "CheckpointFormatError",
    "ClaimRecord",
    "ClaimlabError",
    "ConfigurationError",
    "CorpusFormatError",
    "DatasetSplit",
    "EMOTIONS",
    "EMOTION_DIM",
    "EmotionMode",
    "EncoderConfig",
    "ExperimentResult",
    "GradCheckReport",
    "InputMode",
    "LexiconFormatError",
    "MAX_SNIPPETS",
    "MatrixReport",
    "Pipeline",
    "PreparedExample",
    "RawLabel",
    "Resources",
    "Snippet",
    "Source",
    "TENSOR_ORDER",
    "Tag",
    "Token",
    "TrainConfig",
    "TrainedModel",
    "TrainingDivergedError",
    "TransformKind",
    "VeracityLabel",
    "ablation_sweep",
    "attention_pool",
    "build_vocab",
    "collapse_label",
    "confusion_matrix",
    "delta",
    "detokenize",
    "emit",
    "emo_int",
    "emo_lexi",
    "encode_text",
    "experiment_matrix",
    "f1_macro",
    "featurize_record",
    "forward",
    "generate_synthetic",
    "grad_check",
    "ingest",
    "init_params",
    "load_checkpoint",
    "load_lexicon",
    "mini_affect_lexicon_path",
    "pair_combine",
    "parse_pipeline",
    "parse_pipelines",
    "predict",
    "prepare_dataset",
    "prepare_example",
    "render_report_csv",
    "render_report_text",
    "run_experiment",
    "run_pipeline",
    "save_checkpoint",
    "split",
    "stem",
    "synthetic_benchmark_config",
    "tag_tokens",
    "tokenize",
    "train",
    "transform_tokens",
    "truncate_snippets",
]
