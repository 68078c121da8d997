"""Tokenization, tagging, stemming, and the NEG/POS/STOP/STEM transforms."""

from .resources import (
    Resources,
    bundled_data_path,
    load_antonyms,
    load_stoplist,
    load_tag_lexicon,
    mini_affect_lexicon_path,
)
from .stemmer import stem
from .tagger import tag_tokens
from .tokenizer import Tag, Token, detokenize, tokenize
from .transforms import (
    Pipeline,
    PipelineRun,
    TransformKind,
    apply_neg,
    apply_pos_filter,
    apply_stem,
    apply_stop,
    parse_pipeline,
    parse_pipelines,
    run_pipeline,
    transform_tokens,
)

__all__ = [
    "Pipeline",
    "PipelineRun",
    "Resources",
    "Tag",
    "Token",
    "TransformKind",
    "apply_neg",
    "apply_pos_filter",
    "apply_stem",
    "apply_stop",
    "bundled_data_path",
    "detokenize",
    "load_antonyms",
    "load_stoplist",
    "load_tag_lexicon",
    "mini_affect_lexicon_path",
    "parse_pipeline",
    "parse_pipelines",
    "run_pipeline",
    "stem",
    "tag_tokens",
    "tokenize",
    "transform_tokens",
]
