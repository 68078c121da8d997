"""The four composable affect-neutralizing transforms: NEG, POS, STOP, STEM.

A pipeline is an ordered list of distinct steps. Tag-consuming steps (NEG,
POS) re-tag the current token stream right before they run, so a step that
shortens the stream can change what a later step sees; this is what makes
[pos,stop] and [stop,pos] genuinely different pipelines.

Emotion featurization must look words up in an affect lexicon, and
stemming destroys lexicon keys, so a pipeline run also exposes the token
stream captured just before the first STEM step (or the final stream when
no STEM is present) as the lookup tap point.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from enum import Enum

from ..errors import ConfigurationError
from .resources import Resources
from .stemmer import stem
from .tagger import tag_tokens
from .tokenizer import Tag, Token, detokenize, tokenize

_NEG_CUES = frozenset({"not", "no", "never", "n't"})
_NEG_WINDOW = 3
_CONTENT_TAGS = frozenset({Tag.NOUN, Tag.VERB, Tag.ADJECTIVE})


class TransformKind(Enum):
    """The four transform steps; values are the CLI/config step names."""

    NEG = "neg"
    POS = "pos"
    STOP = "stop"
    STEM = "stem"


_KIND_BY_NAME = {kind.value: kind for kind in TransformKind}
_NEEDS_TAGS = frozenset({TransformKind.NEG, TransformKind.POS})


@dataclass(frozen=True)
class Pipeline:
    """Ordered, duplicate-free transform steps; empty means baseline."""

    steps: tuple[TransformKind, ...] = ()

    def __post_init__(self) -> None:
        if len(set(self.steps)) != len(self.steps):
            raise ValueError(f"duplicate steps in pipeline {self.name!r}")

    @property
    def name(self) -> str:
        return ",".join(s.value for s in self.steps) if self.steps else "none"


def parse_pipeline(text: str) -> Pipeline:
    """Parse a comma-separated step list; "" and "none" mean no steps."""
    text = text.strip()
    if text in ("", "none"):
        return Pipeline()
    steps = []
    for raw in text.split(","):
        name = raw.strip()
        if name not in _KIND_BY_NAME:
            valid = ", ".join(sorted(_KIND_BY_NAME))
            raise ValueError(f"unknown step {name!r}; valid steps: {valid}")
        steps.append(_KIND_BY_NAME[name])
    return Pipeline(steps=tuple(steps))


def parse_pipelines(text: str) -> list[Pipeline]:
    """Parse a semicolon-separated list of pipelines."""
    return [parse_pipeline(part) for part in text.split(";")]


def _antonym_for(token: Token, antonyms: dict[str, str]) -> str | None:
    hit = antonyms.get(token.lower)
    if hit is None:
        hit = antonyms.get(stem(token.lower))
    return hit


def apply_neg(tokens: list[Token], antonyms: dict[str, str]) -> list[Token]:
    """Rewrite negations: delete the cue, swap its target for an antonym.

    For each cue in {not, no, never, n't}, scan up to three following
    tokens, stopping early at another cue. The first token tagged
    Noun/Verb/Adjective whose lower form (or its stem) has an antonym is
    the target. Cues with no target in the window stay untouched.
    Resolution is left to right and non-overlapping.
    """
    out: list[Token] = []
    i = 0
    while i < len(tokens):
        tok = tokens[i]
        if tok.lower not in _NEG_CUES:
            out.append(tok)
            i += 1
            continue
        resolved = False
        for j in range(i + 1, min(i + 1 + _NEG_WINDOW, len(tokens))):
            candidate = tokens[j]
            if candidate.lower in _NEG_CUES:
                break
            if candidate.tag not in _CONTENT_TAGS:
                continue
            antonym = _antonym_for(candidate, antonyms)
            if antonym is None:
                continue
            out.extend(tokens[i + 1 : j])
            out.append(replace(candidate, surface=antonym, lower=antonym))
            i = j + 1
            resolved = True
            break
        if not resolved:
            out.append(tok)
            i += 1
    return out


def apply_pos_filter(tokens: list[Token]) -> list[Token]:
    """Keep only Noun/Verb/Adjective tokens; requires a tagged stream."""
    if any(t.tag is None for t in tokens):
        raise ConfigurationError("pos filter requires tagged tokens")
    return [t for t in tokens if t.tag in _CONTENT_TAGS]


def apply_stop(tokens: list[Token], stoplist: frozenset[str]) -> list[Token]:
    """Drop tokens whose lower form is in the stoplist."""
    return [t for t in tokens if t.lower not in stoplist]


def apply_stem(tokens: list[Token]) -> list[Token]:
    """Replace each token with its stem; tags survive, case does not."""
    out = []
    for tok in tokens:
        stemmed = stem(tok.lower)
        out.append(replace(tok, surface=stemmed, lower=stemmed))
    return out


@dataclass(frozen=True)
class PipelineRun:
    """Final token stream plus the pre-stem tap for emotion lookup."""

    tokens: tuple[Token, ...]
    emotion_tokens: tuple[Token, ...]

    @property
    def text(self) -> str:
        return detokenize(list(self.tokens))


def _require(resource: object, step: TransformKind) -> None:
    if resource is None:
        raise ConfigurationError(f"step {step.value!r} needs a resource that was not provided")


def transform_tokens(text: str, pipeline: Pipeline, resources: Resources) -> PipelineRun:
    """Tokenize, run the pipeline steps in order, keep the emotion tap."""
    tokens = tokenize(text)
    emotion_tokens: tuple[Token, ...] | None = None
    for step in pipeline.steps:
        if step is TransformKind.STEM and emotion_tokens is None:
            emotion_tokens = tuple(tokens)
        if step in _NEEDS_TAGS:
            _require(resources.tag_lexicon, step)
            tokens = tag_tokens(tokens, resources.tag_lexicon)
        if step is TransformKind.NEG:
            _require(resources.antonyms, step)
            tokens = apply_neg(tokens, resources.antonyms)
        elif step is TransformKind.POS:
            tokens = apply_pos_filter(tokens)
        elif step is TransformKind.STOP:
            _require(resources.stoplist, step)
            tokens = apply_stop(tokens, resources.stoplist)
        else:
            tokens = apply_stem(tokens)
    final = tuple(tokens)
    return PipelineRun(tokens=final, emotion_tokens=emotion_tokens if emotion_tokens is not None else final)


def run_pipeline(text: str, pipeline: Pipeline, resources: Resources) -> str:
    """Transformed text as a single-space join of the final stream."""
    return transform_tokens(text, pipeline, resources).text
