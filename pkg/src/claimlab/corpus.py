"""Data model, ingestion, label collapse, splitting, and synthetic data.

Records travel as one JSON object per line with keys id, claim, label,
source, snippets (rank/text pairs). The wire label is the raw five-way
form; the collapsed three-way label is derived on load. The synthetic
generator builds corpora where the label is a function of claim and
evidence jointly while evidence alone carries no label signal, which is
what makes the claim-vs-evidence delta diagnostic meaningful at desk
scale.
"""

from __future__ import annotations

import itertools
import json
import random
from dataclasses import dataclass, replace
from enum import Enum
from pathlib import Path
from typing import Iterator

from .errors import CorpusFormatError

MAX_SNIPPETS = 10


class RawLabel(Enum):
    """Five-way source label; values are the wire strings."""

    FALSE = "false"
    MOSTLY_FALSE = "mostly false"
    MIXTURE = "mixture"
    MOSTLY_TRUE = "mostly true"
    TRUE = "true"

    @classmethod
    def parse(cls, text: str) -> "RawLabel":
        normalized = " ".join(text.lower().replace("_", " ").replace("-", " ").split())
        for member in cls:
            if member.value == normalized:
                return member
        raise ValueError(f"unknown raw label {text!r}")


class VeracityLabel(Enum):
    """Collapsed three-way label; values are the fixed class indices."""

    FALSE = 0
    MIXTURE = 1
    TRUE = 2

    @property
    def class_index(self) -> int:
        return self.value


class Source(Enum):
    """Corpus provenance; values are the wire strings."""

    SNOPES = "snopes"
    POLITIFACT = "pomt"
    SYNTHETIC = "synthetic"

    @classmethod
    def parse(cls, text: str) -> "Source":
        for member in cls:
            if member.value == text:
                return member
        raise ValueError(f"unknown source {text!r}")


_COLLAPSE = {
    RawLabel.FALSE: VeracityLabel.FALSE,
    RawLabel.MOSTLY_FALSE: VeracityLabel.FALSE,
    RawLabel.MIXTURE: VeracityLabel.MIXTURE,
    RawLabel.MOSTLY_TRUE: VeracityLabel.TRUE,
    RawLabel.TRUE: VeracityLabel.TRUE,
}


def collapse_label(raw: RawLabel) -> VeracityLabel:
    """Five-to-three collapse; the only monotone surjection keeping endpoints."""
    return _COLLAPSE[raw]


@dataclass(frozen=True)
class Snippet:
    """One ranked evidence text; rank 1 is the top search hit."""

    rank: int
    text: str


@dataclass(frozen=True)
class ClaimRecord:
    """A claim, its collapsed label, and up to ten ranked snippets."""

    id: str
    claim_text: str
    raw_label: RawLabel
    label: VeracityLabel
    snippets: tuple[Snippet, ...]
    source: Source

    def __post_init__(self) -> None:
        if self.label is not collapse_label(self.raw_label):
            raise ValueError(f"record {self.id!r}: label does not match raw label")
        ranks = [s.rank for s in self.snippets]
        if len(ranks) > MAX_SNIPPETS:
            raise ValueError(f"record {self.id!r}: more than {MAX_SNIPPETS} snippets")
        if any(not 1 <= r <= MAX_SNIPPETS for r in ranks):
            raise ValueError(f"record {self.id!r}: snippet rank outside 1..{MAX_SNIPPETS}")
        if len(set(ranks)) != len(ranks):
            raise ValueError(f"record {self.id!r}: duplicate snippet ranks")
        if sorted(ranks) != ranks:
            raise ValueError(f"record {self.id!r}: snippets not sorted by rank")

    @classmethod
    def build(
        cls,
        record_id: str,
        claim_text: str,
        raw_label: RawLabel,
        snippets: list[Snippet] | tuple[Snippet, ...],
        source: Source,
    ) -> "ClaimRecord":
        """Sort snippets by rank and derive the collapsed label."""
        return cls(
            id=record_id,
            claim_text=claim_text,
            raw_label=raw_label,
            label=collapse_label(raw_label),
            snippets=tuple(sorted(snippets, key=lambda s: s.rank)),
            source=source,
        )


def truncate_snippets(record: ClaimRecord, k: int) -> ClaimRecord:
    """Keep the top-k snippets by rank (lowest rank numbers first)."""
    if not 1 <= k <= MAX_SNIPPETS:
        raise ValueError(f"k must be in 1..{MAX_SNIPPETS}, got {k}")
    return replace(record, snippets=record.snippets[:k])


_RECORD_KEYS = {"id", "claim", "label", "source", "snippets"}
_SNIPPET_KEYS = {"rank", "text"}


def _parse_record(payload: dict, line_no: int) -> ClaimRecord:
    if not isinstance(payload, dict):
        raise CorpusFormatError(f"line {line_no}: record is not an object")
    extra = set(payload) - _RECORD_KEYS
    missing = _RECORD_KEYS - set(payload)
    if extra or missing:
        raise CorpusFormatError(
            f"line {line_no}: bad keys (missing {sorted(missing)}, unexpected {sorted(extra)})"
        )
    snippets = []
    if not isinstance(payload["snippets"], list):
        raise CorpusFormatError(f"line {line_no}: snippets is not a list")
    for pos, raw in enumerate(payload["snippets"]):
        if not isinstance(raw, dict) or set(raw) != _SNIPPET_KEYS:
            raise CorpusFormatError(f"line {line_no}: snippet {pos} must have keys rank, text")
        if not isinstance(raw["rank"], int) or isinstance(raw["rank"], bool):
            raise CorpusFormatError(f"line {line_no}: snippet {pos} rank is not an integer")
        if not isinstance(raw["text"], str):
            raise CorpusFormatError(f"line {line_no}: snippet {pos} text is not a string")
        snippets.append(Snippet(rank=raw["rank"], text=raw["text"]))
    if not isinstance(payload["id"], str) or not payload["id"]:
        raise CorpusFormatError(f"line {line_no}: id must be a non-empty string")
    if not isinstance(payload["claim"], str):
        raise CorpusFormatError(f"line {line_no}: claim is not a string")
    try:
        raw_label = RawLabel.parse(str(payload["label"]))
        source = Source.parse(str(payload["source"]))
        return ClaimRecord.build(payload["id"], payload["claim"], raw_label, snippets, source)
    except ValueError as exc:
        raise CorpusFormatError(f"line {line_no}: {exc}") from exc


def ingest(path: str | Path) -> list[ClaimRecord]:
    """Read a line-delimited corpus; any malformed line is a hard error."""
    records: list[ClaimRecord] = []
    seen: set[str] = set()
    with open(path, encoding="utf-8") as fh:
        for line_no, line in enumerate(fh, start=1):
            if not line.strip():
                continue
            try:
                payload = json.loads(line)
            except json.JSONDecodeError as exc:
                raise CorpusFormatError(f"line {line_no}: invalid JSON ({exc.msg})") from exc
            record = _parse_record(payload, line_no)
            if record.id in seen:
                raise CorpusFormatError(f"line {line_no}: duplicate id {record.id!r}")
            seen.add(record.id)
            records.append(record)
    return records


def emit(records: list[ClaimRecord], path: str | Path) -> None:
    """Write records byte-stably: fixed key order, no extra whitespace."""
    with open(path, "w", encoding="utf-8") as fh:
        for record in records:
            payload = {
                "id": record.id,
                "claim": record.claim_text,
                "label": record.raw_label.value,
                "source": record.source.value,
                "snippets": [{"rank": s.rank, "text": s.text} for s in record.snippets],
            }
            fh.write(json.dumps(payload, ensure_ascii=False, separators=(",", ":")))
            fh.write("\n")


@dataclass(frozen=True)
class DatasetSplit:
    """Disjoint train/dev/test partitions of one corpus."""

    train: tuple[ClaimRecord, ...]
    dev: tuple[ClaimRecord, ...]
    test: tuple[ClaimRecord, ...]
    seed: int


def _allocate(count: int, ratios: tuple[float, float, float]) -> list[int]:
    """Largest-remainder allocation of count items over three ratios."""
    ideal = [count * r for r in ratios]
    floors = [int(x) for x in ideal]
    remainder = count - sum(floors)
    order = sorted(range(3), key=lambda i: (ideal[i] - floors[i], -i), reverse=True)
    for i in order[:remainder]:
        floors[i] += 1
    return floors


def split(
    records: list[ClaimRecord],
    ratios: tuple[float, float, float] = (0.8, 0.1, 0.1),
    seed: int = 0,
) -> DatasetSplit:
    """Seeded stratified split; per-class proportions within one record."""
    if len(ratios) != 3 or any(r <= 0 for r in ratios):
        raise ValueError("ratios must be three positive fractions")
    if abs(sum(ratios) - 1.0) > 1e-9:
        raise ValueError(f"ratios must sum to 1, got {sum(ratios)}")
    if len(records) < len(VeracityLabel):
        raise ValueError("fewer records than classes")
    rng = random.Random(seed)
    parts: dict[str, list[ClaimRecord]] = {"train": [], "dev": [], "test": []}
    for label in VeracityLabel:
        group = [r for r in records if r.label is label]
        rng.shuffle(group)
        n_train, n_dev, _ = _allocate(len(group), tuple(ratios))
        parts["train"].extend(group[:n_train])
        parts["dev"].extend(group[n_train : n_train + n_dev])
        parts["test"].extend(group[n_train + n_dev :])
    return DatasetSplit(
        train=tuple(parts["train"]),
        dev=tuple(parts["dev"]),
        test=tuple(parts["test"]),
        seed=seed,
    )


# Synthetic corpus ingredients. Positive and negative stance pools are
# antonym pairs so the NEG transform stays meaningful on synthetic text.
_POSITIVE_STANCES = ("strong", "honest", "brave", "generous", "loyal")
_NEGATIVE_STANCES = ("weak", "dishonest", "cowardly", "stingy", "treacherous")
_STANCE_PAIRS = tuple(zip(_POSITIVE_STANCES, _NEGATIVE_STANCES))
_ANTONYM = {w: a for pair in _STANCE_PAIRS for w, a in (pair, pair[::-1])}
_ALL_STANCES = _POSITIVE_STANCES + _NEGATIVE_STANCES
# Distinct non-entity surface forms: 10 stance words, 15 template words,
# and the claim's "is". Half of any budget beyond that goes to entities,
# which keeps each entity frequent enough that no single record is
# identifiable by its entities alone.
_FIXED_WORD_BUDGET = len(_ALL_STANCES) + 16
_MIN_ENTITIES = 4
_SNIPPET_TEMPLATES = (
    "Witnesses described {entity} as {stance}",
    "Local reports called {entity} {stance}",
    "Records show {entity} was {stance}",
    "Several observers labeled {entity} {stance}",
    "Neighbors insisted {entity} seemed {stance}",
)
_RAW_BY_CLASS = {
    VeracityLabel.TRUE: (RawLabel.TRUE, RawLabel.MOSTLY_TRUE),
    VeracityLabel.FALSE: (RawLabel.FALSE, RawLabel.MOSTLY_FALSE),
    VeracityLabel.MIXTURE: (RawLabel.MIXTURE,),
}


def _entity_pool(size: int) -> list[str]:
    """Deterministic pseudo-word entities from a fixed syllable grid."""
    onsets = ("b", "d", "f", "g", "k", "l", "m", "n", "p", "r", "s", "t", "v", "z")
    vowels = ("a", "e", "i", "o", "u")
    names = []
    for o1, v1, o2, v2 in itertools.product(onsets, vowels, onsets, vowels):
        names.append((o1 + v1 + o2 + v2).capitalize())
        if len(names) == size:
            return names
    for o1, v1, o2, v2, o3, v3 in itertools.product(onsets, vowels, onsets, vowels, onsets, vowels):
        names.append((o1 + v1 + o2 + v2 + o3 + v3).capitalize())
        if len(names) == size:
            return names
    raise ValueError(f"entity pool of {size} exceeds the name grid")


def _shuffled_cycle(rng: random.Random, items: tuple) -> Iterator[str]:
    """Endless stream over items, reshuffled each full pass."""
    deck = list(items)
    while True:
        rng.shuffle(deck)
        yield from tuple(deck)


def generate_synthetic(n: int, vocab_size: int = 40, seed: int = 0) -> list[ClaimRecord]:
    """Corpus where the label needs the claim: evidence alone is uninformative.

    Every record concerns two entities. Five snippets agree that entity A
    holds one stance word; five give entity B a three-against-two split
    between a stance word and its antonym. A True record claims A holds
    its agreed stance, a False record claims the antonym, and a Mixture
    record claims either stance of contested B. Entities and stance words
    are dealt from per-class shuffled decks, so every evidence token is
    used equally often under every label and an evidence-only model can
    do no better than chance.
    """
    if n < 30:
        raise ValueError(f"n must be at least 30, got {n}")
    if vocab_size < 20:
        raise ValueError(f"vocab_size must be at least 20, got {vocab_size}")
    entities = tuple(
        _entity_pool(max(_MIN_ENTITIES, (vocab_size - _FIXED_WORD_BUDGET) // 2))
    )
    rng = random.Random(seed)
    a_deals = [_shuffled_cycle(rng, entities) for _ in range(len(VeracityLabel))]
    b_deals = [_shuffled_cycle(rng, entities) for _ in range(len(VeracityLabel))]
    agreed_deals = [_shuffled_cycle(rng, _ALL_STANCES) for _ in range(len(VeracityLabel))]
    majority_deals = [_shuffled_cycle(rng, _ALL_STANCES) for _ in range(len(VeracityLabel))]
    records = []
    for i in range(n):
        class_slot = i % 3
        target = [VeracityLabel.FALSE, VeracityLabel.MIXTURE, VeracityLabel.TRUE][class_slot]
        entity_a = next(a_deals[class_slot])
        entity_b = next(b_deals[class_slot])
        while entity_b == entity_a:
            entity_b = next(b_deals[class_slot])
        agreed = next(agreed_deals[class_slot])
        majority = next(majority_deals[class_slot])
        while majority in (agreed, _ANTONYM[agreed]):
            majority = next(majority_deals[class_slot])
        # Each group cycles through all five templates once, so the
        # template multiset is identical in every record and cannot
        # fingerprint individual examples.
        texts = [
            template.format(entity=entity_a, stance=agreed)
            for template in _SNIPPET_TEMPLATES
        ]
        contested = [majority] * 3 + [_ANTONYM[majority]] * 2
        rng.shuffle(contested)
        texts.extend(
            template.format(entity=entity_b, stance=stance)
            for template, stance in zip(_SNIPPET_TEMPLATES, contested)
        )
        rng.shuffle(texts)
        snippets = [Snippet(rank=r, text=t) for r, t in enumerate(texts, start=1)]

        if target is VeracityLabel.TRUE:
            claim_entity, claim_stance = entity_a, agreed
        elif target is VeracityLabel.FALSE:
            claim_entity, claim_stance = entity_a, _ANTONYM[agreed]
        else:
            claim_entity, claim_stance = entity_b, rng.choice((majority, _ANTONYM[majority]))
        claim = f"{claim_entity} is {claim_stance}"
        raw = rng.choice(_RAW_BY_CLASS[target])
        records.append(
            ClaimRecord.build(f"syn-{seed}-{i:05d}", claim, raw, snippets, Source.SYNTHETIC)
        )
    return records
