"""Dual-attention claim/evidence classifier trained from scratch.

The encoder is a mean-pooled embedding bag with hashed fallback buckets
for unseen tokens. Each snippet is fused with the claim through a
[c ; s ; c*s] tanh combiner, one additive-attention layer pools the fused
snippet vectors, a second pools projected per-snippet emotion vectors,
and a linear head over [evidence pool ; emotion pool ; claim vector]
yields three class probabilities. All math is float64 numpy with a
hand-written backward pass, verifiable against finite differences.

Input modes: EVIDENCE_ONLY zeroes the claim vector (so no gradient ever
reaches claim tokens), CLAIM_ONLY skips the snippet and emotion branches
entirely, and CLAIM_AND_EVIDENCE uses everything. Training is
single-threaded and bit-reproducible for a fixed seed.
"""

from __future__ import annotations

import json
import struct
import zlib
from dataclasses import dataclass, field, replace
from enum import Enum
from pathlib import Path

import numpy as np

from .corpus import ClaimRecord, DatasetSplit, VeracityLabel
from .emolex import EMOTION_DIM, AffectLexicon, EmotionMode, featurize_record
from .errors import CheckpointFormatError, ConfigurationError, TrainingDivergedError
from .preprocess import Pipeline, Resources, transform_tokens

N_CLASSES = len(VeracityLabel)

TENSOR_ORDER = (
    "embeddings",
    "w_pair",
    "b_pair",
    "w_s",
    "u_s",
    "w_p",
    "w_e",
    "u_e",
    "w_c",
    "b_c",
)

_ADAM_BETA1 = 0.9
_ADAM_BETA2 = 0.999
_ADAM_EPS = 1e-8

_CHECKPOINT_MAGIC = b"CLMB"
_CHECKPOINT_VERSION = 1


class InputMode(Enum):
    """Which parts of a record the classifier is allowed to see."""

    CLAIM_ONLY = "claim_only"
    EVIDENCE_ONLY = "evidence_only"
    CLAIM_AND_EVIDENCE = "claim_and_evidence"

    @classmethod
    def parse(cls, text: str) -> "InputMode":
        for member in cls:
            if member.value == text.lower():
                return member
        raise ValueError(f"unknown input mode {text!r}")


@dataclass(frozen=True)
class EncoderConfig:
    """Vocabulary plus embedding geometry; built from the training split."""

    vocab: dict[str, int] = field(repr=False)
    embed_dim: int = 64
    oov_buckets: int = 1024


@dataclass(frozen=True)
class TrainConfig:
    """Every knob of one training run; defaults suit desk-scale corpora."""

    epochs: int = 200
    batch_size: int = 16
    learning_rate: float = 1e-3
    seed: int = 0
    mode: InputMode = InputMode.CLAIM_AND_EVIDENCE
    emotion_mode: EmotionMode = EmotionMode.NONE
    hidden_dim: int = 64
    attn_dim: int = 32
    emo_dim: int = 16
    embed_dim: int = 64
    oov_buckets: int = 1024
    l2: float = 1e-5


@dataclass(frozen=True)
class PreparedExample:
    """A record after preprocessing: token bags, emotion rows, gold index."""

    record_id: str
    claim_tokens: tuple[str, ...]
    snippet_tokens: tuple[tuple[str, ...], ...]
    emotion: np.ndarray = field(repr=False)
    gold: int


@dataclass
class TrainedModel:
    """Parameters plus the configs needed to run them."""

    params: dict[str, np.ndarray]
    encoder: EncoderConfig
    config: TrainConfig


def prepare_example(
    record: ClaimRecord,
    lex: AffectLexicon | None,
    pipeline: Pipeline,
    emotion_mode: EmotionMode,
    resources: Resources,
) -> PreparedExample:
    """Run the pipeline over claim and snippets; drop empty-text snippets."""
    claim_run = transform_tokens(record.claim_text, pipeline, resources)
    kept_rows = [i for i, sn in enumerate(record.snippets) if sn.text.strip()]
    snippet_tokens = []
    for i in kept_rows:
        run = transform_tokens(record.snippets[i].text, pipeline, resources)
        snippet_tokens.append(tuple(t.lower for t in run.tokens))
    if emotion_mode is EmotionMode.NONE:
        emotion = np.zeros((len(kept_rows), EMOTION_DIM), dtype=np.float64)
    else:
        if lex is None:
            raise ConfigurationError(f"emotion mode {emotion_mode.value!r} needs a lexicon")
        emotion = featurize_record(record, lex, emotion_mode, pipeline, resources)[kept_rows]
    return PreparedExample(
        record_id=record.id,
        claim_tokens=tuple(t.lower for t in claim_run.tokens),
        snippet_tokens=tuple(snippet_tokens),
        emotion=emotion,
        gold=record.label.class_index,
    )


def build_vocab(examples: list[PreparedExample]) -> dict[str, int]:
    """Dense sorted vocabulary over claim and snippet tokens."""
    seen: set[str] = set()
    for ex in examples:
        seen.update(ex.claim_tokens)
        for tokens in ex.snippet_tokens:
            seen.update(tokens)
    return {tok: i for i, tok in enumerate(sorted(seen))}


def _token_index(token: str, encoder: EncoderConfig) -> int | None:
    idx = encoder.vocab.get(token)
    if idx is not None:
        return idx
    if encoder.oov_buckets <= 0:
        return None
    return len(encoder.vocab) + zlib.crc32(token.encode("utf-8")) % encoder.oov_buckets


def _encode(
    tokens: tuple[str, ...], embeddings: np.ndarray, encoder: EncoderConfig
) -> tuple[np.ndarray, list[int]]:
    idxs = [i for i in (_token_index(t, encoder) for t in tokens) if i is not None]
    if not idxs:
        return np.zeros(encoder.embed_dim, dtype=np.float64), idxs
    return embeddings[idxs].mean(axis=0), idxs


def encode_text(tokens: list[str], params: dict[str, np.ndarray], encoder: EncoderConfig) -> np.ndarray:
    """Mean of embedding rows; empty input gives the zero vector."""
    vec, _ = _encode(tuple(tokens), params["embeddings"], encoder)
    return vec


def pair_combine(claim_vec: np.ndarray, snippet_vec: np.ndarray, params: dict[str, np.ndarray]) -> np.ndarray:
    """tanh(W_pair [c ; s ; c*s] + b) for a single claim/snippet pair."""
    x = np.concatenate([claim_vec, snippet_vec, claim_vec * snippet_vec])
    return np.tanh(params["w_pair"] @ x + params["b_pair"])


def _softmax(scores: np.ndarray) -> np.ndarray:
    shifted = scores - scores.max()
    exp = np.exp(shifted)
    return exp / exp.sum()


def attention_pool(
    items: np.ndarray,
    weight: np.ndarray,
    context: np.ndarray,
    mask: np.ndarray | None = None,
) -> tuple[np.ndarray, np.ndarray]:
    """Additive attention: softmax over u . tanh(W item), then weighted sum.

    Masked items get weight zero; raises if every item is masked.
    """
    items = np.asarray(items, dtype=np.float64)
    if items.ndim != 2 or items.shape[0] == 0:
        raise ValueError("items must be a non-empty (k, d) array")
    live = np.ones(items.shape[0], dtype=bool) if mask is None else np.asarray(mask, dtype=bool)
    if not live.any():
        raise ValueError("attention over fully masked items")
    scores = np.tanh(items @ weight.T) @ context
    weights = np.zeros(items.shape[0], dtype=np.float64)
    weights[live] = _softmax(scores[live])
    return weights, weights @ items


def init_params(encoder: EncoderConfig, config: TrainConfig, rng: np.random.Generator) -> dict[str, np.ndarray]:
    """Seeded dense init, scaled by fan-in; biases start at zero."""
    e, h, a, m = encoder.embed_dim, config.hidden_dim, config.attn_dim, config.emo_dim
    rows = len(encoder.vocab) + encoder.oov_buckets

    def dense(shape: tuple[int, ...], fan_in: int) -> np.ndarray:
        return rng.normal(0.0, 1.0 / np.sqrt(fan_in), size=shape)

    return {
        "embeddings": rng.normal(0.0, 0.1, size=(rows, e)),
        "w_pair": dense((h, 3 * e), 3 * e),
        "b_pair": np.zeros(h, dtype=np.float64),
        "w_s": dense((a, h), h),
        "u_s": dense((a,), a),
        "w_p": dense((m, EMOTION_DIM), EMOTION_DIM),
        "w_e": dense((a, m), m),
        "u_e": dense((a,), a),
        "w_c": dense((N_CLASSES, h + m + e), h + m + e),
        "b_c": np.zeros(N_CLASSES, dtype=np.float64),
    }


def _forward(
    example: PreparedExample,
    params: dict[str, np.ndarray],
    config: TrainConfig,
    encoder: EncoderConfig,
    mode: InputMode,
) -> tuple[np.ndarray, dict]:
    embeddings = params["embeddings"]
    e = encoder.embed_dim
    use_claim = mode is not InputMode.EVIDENCE_ONLY
    use_evidence = mode is not InputMode.CLAIM_ONLY
    use_emotion = use_evidence and config.emotion_mode is not EmotionMode.NONE

    if use_claim:
        c, c_idx = _encode(example.claim_tokens, embeddings, encoder)
    else:
        c, c_idx = np.zeros(e, dtype=np.float64), []

    cache: dict = {
        "use_claim": use_claim,
        "use_evidence": use_evidence,
        "use_emotion": use_emotion,
        "c": c,
        "c_idx": c_idx,
        "gold": example.gold,
    }

    if use_evidence:
        if not example.snippet_tokens:
            raise ValueError(f"record {example.record_id!r} has no snippets in an evidence mode")
        encoded = [_encode(toks, embeddings, encoder) for toks in example.snippet_tokens]
        snips = np.stack([vec for vec, _ in encoded])
        x = np.concatenate([np.repeat(c[None, :], len(snips), axis=0), snips, c * snips], axis=1)
        pre = x @ params["w_pair"].T + params["b_pair"]
        hidden = np.tanh(pre)
        t_s = np.tanh(hidden @ params["w_s"].T)
        alpha = _softmax(t_s @ params["u_s"])
        ev_pool = alpha @ hidden
        cache.update(
            s_idx=[idx for _, idx in encoded], snips=snips, x=x, hidden=hidden,
            t_s=t_s, alpha=alpha,
        )
        if use_emotion:
            emo_hat = example.emotion @ params["w_p"].T
            t_e = np.tanh(emo_hat @ params["w_e"].T)
            beta = _softmax(t_e @ params["u_e"])
            emo_pool = beta @ emo_hat
            cache.update(emotion=example.emotion, emo_hat=emo_hat, t_e=t_e, beta=beta)
        else:
            emo_pool = np.zeros(config.emo_dim, dtype=np.float64)
    else:
        ev_pool = np.zeros(config.hidden_dim, dtype=np.float64)
        emo_pool = np.zeros(config.emo_dim, dtype=np.float64)

    feats = np.concatenate([ev_pool, emo_pool, c])
    logits = params["w_c"] @ feats + params["b_c"]
    probs = _softmax(logits)
    cache.update(feats=feats, probs=probs)
    return probs, cache


def forward(
    example: PreparedExample,
    params: dict[str, np.ndarray],
    config: TrainConfig,
    encoder: EncoderConfig,
    mode: InputMode,
) -> np.ndarray:
    """Class probabilities for one prepared example."""
    probs, _ = _forward(example, params, config, encoder, mode)
    return probs


def cross_entropy(probs: np.ndarray, label: VeracityLabel) -> float:
    """Negative log-probability of the gold class.

    A zero probability yields inf rather than a warning; the training
    loop turns that into a divergence error with guidance.
    """
    with np.errstate(divide="ignore"):
        return float(-np.log(probs[label.class_index]))


def _zero_grads(params: dict[str, np.ndarray]) -> dict[str, np.ndarray]:
    return {name: np.zeros_like(tensor) for name, tensor in params.items()}


def _backward_into(
    grads: dict[str, np.ndarray],
    cache: dict,
    params: dict[str, np.ndarray],
    encoder: EncoderConfig,
) -> None:
    """Accumulate the cross-entropy gradient of one example into grads."""
    e = encoder.embed_dim
    hidden_dim = params["w_s"].shape[1]
    emo_dim = params["w_p"].shape[0]

    dlogits = cache["probs"].copy()
    dlogits[cache["gold"]] -= 1.0
    grads["w_c"] += np.outer(dlogits, cache["feats"])
    grads["b_c"] += dlogits
    dfeats = params["w_c"].T @ dlogits
    dev_pool = dfeats[:hidden_dim]
    demo_pool = dfeats[hidden_dim : hidden_dim + emo_dim]
    dc = dfeats[hidden_dim + emo_dim :].copy()

    if cache["use_evidence"]:
        hidden, t_s, alpha = cache["hidden"], cache["t_s"], cache["alpha"]
        dh = alpha[:, None] * dev_pool[None, :]
        dalpha = hidden @ dev_pool
        dscore = alpha * (dalpha - float(alpha @ dalpha))
        grads["u_s"] += t_s.T @ dscore
        dpre_attn = np.outer(dscore, params["u_s"]) * (1.0 - t_s**2)
        grads["w_s"] += dpre_attn.T @ hidden
        dh += dpre_attn @ params["w_s"]

        if cache["use_emotion"]:
            emo_hat, t_e, beta = cache["emo_hat"], cache["t_e"], cache["beta"]
            demo_hat = beta[:, None] * demo_pool[None, :]
            dbeta = emo_hat @ demo_pool
            dscore_e = beta * (dbeta - float(beta @ dbeta))
            grads["u_e"] += t_e.T @ dscore_e
            dpre_e = np.outer(dscore_e, params["u_e"]) * (1.0 - t_e**2)
            grads["w_e"] += dpre_e.T @ emo_hat
            demo_hat += dpre_e @ params["w_e"]
            grads["w_p"] += demo_hat.T @ cache["emotion"]

        dz = dh * (1.0 - hidden**2)
        grads["w_pair"] += dz.T @ cache["x"]
        grads["b_pair"] += dz.sum(axis=0)
        dx = dz @ params["w_pair"]
        c, snips = cache["c"], cache["snips"]
        dsnips = dx[:, e : 2 * e] + dx[:, 2 * e :] * c[None, :]
        if cache["use_claim"]:
            dc += (dx[:, :e] + dx[:, 2 * e :] * snips).sum(axis=0)
        for i, idxs in enumerate(cache["s_idx"]):
            if idxs:
                np.add.at(grads["embeddings"], idxs, dsnips[i] / len(idxs))

    if cache["use_claim"] and cache["c_idx"]:
        np.add.at(grads["embeddings"], cache["c_idx"], dc / len(cache["c_idx"]))


def example_gradients(
    example: PreparedExample,
    params: dict[str, np.ndarray],
    config: TrainConfig,
    encoder: EncoderConfig,
    mode: InputMode,
) -> dict[str, np.ndarray]:
    """Gradient of (cross-entropy + l2 penalty) for a single example."""
    grads = _zero_grads(params)
    _, cache = _forward(example, params, config, encoder, mode)
    _backward_into(grads, cache, params, encoder)
    if config.l2:
        for name in TENSOR_ORDER:
            grads[name] += 2.0 * config.l2 * params[name]
    return grads


def _snapshot(params: dict[str, np.ndarray]) -> dict[str, np.ndarray]:
    return {name: tensor.copy() for name, tensor in params.items()}


def _l2_penalty(params: dict[str, np.ndarray], l2: float) -> float:
    if not l2:
        return 0.0
    return l2 * sum(float((params[name] ** 2).sum()) for name in TENSOR_ORDER)


def prepare_dataset(
    records: tuple[ClaimRecord, ...] | list[ClaimRecord],
    lex: AffectLexicon | None,
    pipeline: Pipeline,
    emotion_mode: EmotionMode,
    resources: Resources,
) -> list[PreparedExample]:
    return [prepare_example(r, lex, pipeline, emotion_mode, resources) for r in records]


def _dev_macro_f1(
    examples: list[PreparedExample],
    params: dict[str, np.ndarray],
    config: TrainConfig,
    encoder: EncoderConfig,
) -> float:
    from .evaluate import f1_macro

    preds = []
    golds = []
    for ex in examples:
        probs, _ = _forward(ex, params, config, encoder, config.mode)
        preds.append(VeracityLabel(int(np.argmax(probs))))
        golds.append(VeracityLabel(ex.gold))
    return f1_macro(preds, golds)


def train(
    dataset: DatasetSplit,
    lex: AffectLexicon | None,
    pipeline: Pipeline,
    config: TrainConfig,
    resources: Resources | None = None,
) -> tuple[TrainedModel, list[dict]]:
    """Adam mini-batch training with best-dev-F1 parameter selection.

    History holds one {"epoch", "train_loss", "dev_f1"} row per epoch.
    Bit-reproducible for a fixed config and seed.
    """
    if not dataset.train or not dataset.dev:
        raise ConfigurationError("train and dev splits must be non-empty")
    if config.emotion_mode is not EmotionMode.NONE and lex is None:
        raise ConfigurationError(
            f"emotion mode {config.emotion_mode.value!r} requires an affect lexicon"
        )
    if resources is None:
        resources = Resources.bundled()

    train_examples = prepare_dataset(dataset.train, lex, pipeline, config.emotion_mode, resources)
    dev_examples = prepare_dataset(dataset.dev, lex, pipeline, config.emotion_mode, resources)
    encoder = EncoderConfig(
        vocab=build_vocab(train_examples),
        embed_dim=config.embed_dim,
        oov_buckets=config.oov_buckets,
    )
    rng = np.random.default_rng(config.seed)
    params = init_params(encoder, config, rng)
    adam_m = _zero_grads(params)
    adam_v = _zero_grads(params)
    step = 0
    best_f1 = -1.0
    best_params = _snapshot(params)
    history: list[dict] = []

    for epoch in range(config.epochs):
        order = rng.permutation(len(train_examples))
        epoch_losses = []
        for start in range(0, len(order), config.batch_size):
            batch = order[start : start + config.batch_size]
            grads = _zero_grads(params)
            batch_ce = 0.0
            for idx in batch:
                example = train_examples[int(idx)]
                probs, cache = _forward(example, params, config, encoder, config.mode)
                batch_ce += cross_entropy(probs, VeracityLabel(example.gold))
                _backward_into(grads, cache, params, encoder)
            scale = 1.0 / len(batch)
            penalty = _l2_penalty(params, config.l2)
            for name in TENSOR_ORDER:
                grads[name] *= scale
                if config.l2:
                    grads[name] += 2.0 * config.l2 * params[name]
            batch_loss = batch_ce * scale + penalty
            if not np.isfinite(batch_loss):
                raise TrainingDivergedError(
                    f"non-finite loss at epoch {epoch}: try a learning rate below "
                    f"{config.learning_rate}"
                )
            epoch_losses.append(batch_loss)
            step += 1
            for name in TENSOR_ORDER:
                g = grads[name]
                adam_m[name] = _ADAM_BETA1 * adam_m[name] + (1.0 - _ADAM_BETA1) * g
                adam_v[name] = _ADAM_BETA2 * adam_v[name] + (1.0 - _ADAM_BETA2) * g * g
                m_hat = adam_m[name] / (1.0 - _ADAM_BETA1**step)
                v_hat = adam_v[name] / (1.0 - _ADAM_BETA2**step)
                params[name] -= config.learning_rate * m_hat / (np.sqrt(v_hat) + _ADAM_EPS)
        dev_f1 = _dev_macro_f1(dev_examples, params, config, encoder)
        history.append(
            {"epoch": epoch, "train_loss": float(np.mean(epoch_losses)), "dev_f1": dev_f1}
        )
        if dev_f1 > best_f1:
            best_f1 = dev_f1
            best_params = _snapshot(params)

    return TrainedModel(params=best_params, encoder=encoder, config=config), history


def predict(
    model: TrainedModel,
    record: ClaimRecord,
    lex: AffectLexicon | None,
    pipeline: Pipeline,
    resources: Resources,
    mode: InputMode | None = None,
) -> VeracityLabel:
    """Argmax class; ties break toward the lower class index."""
    mode = model.config.mode if mode is None else mode
    example = prepare_example(record, lex, pipeline, model.config.emotion_mode, resources)
    probs, _ = _forward(example, model.params, model.config, model.encoder, mode)
    return VeracityLabel(int(np.argmax(probs)))


@dataclass(frozen=True)
class GradCheckReport:
    """Finite-difference comparison summary for one example."""

    max_rel_error: float
    checked: int
    skipped: int
    per_tensor: dict[str, float]


def grad_check(
    params: dict[str, np.ndarray],
    example: PreparedExample,
    config: TrainConfig,
    encoder: EncoderConfig,
    mode: InputMode | None = None,
    backward_fn=None,
    coords_per_tensor: int = 50,
    step_size: float = 1e-5,
    rng_seed: int = 0,
) -> GradCheckReport:
    """Central-difference check of the analytic gradient on one example.

    Coordinates where both gradients are effectively zero are skipped and
    counted, not failed. backward_fn is injectable so tests can verify
    that a corrupted gradient is actually detected.
    """
    mode = config.mode if mode is None else mode

    def loss_at(p: dict[str, np.ndarray]) -> float:
        probs, _ = _forward(example, p, config, encoder, mode)
        return cross_entropy(probs, VeracityLabel(example.gold)) + _l2_penalty(p, config.l2)

    if backward_fn is None:
        grads = example_gradients(example, params, config, encoder, mode)
    else:
        grads = backward_fn(example, params, config, encoder, mode)

    rng = np.random.default_rng(rng_seed)
    worst = 0.0
    checked = 0
    skipped = 0
    per_tensor: dict[str, float] = {}
    for name in TENSOR_ORDER:
        tensor = params[name]
        tensor_worst = 0.0
        if tensor.size == 0:
            skipped += coords_per_tensor
            per_tensor[name] = 0.0
            continue
        count = min(coords_per_tensor, tensor.size)
        flat_choices = rng.choice(tensor.size, size=count, replace=False)
        for flat in flat_choices:
            coord = np.unravel_index(int(flat), tensor.shape)
            original = tensor[coord]
            tensor[coord] = original + step_size
            up = loss_at(params)
            tensor[coord] = original - step_size
            down = loss_at(params)
            tensor[coord] = original
            numeric = (up - down) / (2.0 * step_size)
            analytic = grads[name][coord]
            # Below ~1e-6 the central difference is dominated by float64
            # cancellation noise (eps/h ~ 2e-11), so a relative comparison
            # is meaningless there.
            if abs(numeric) < 1e-6 and abs(analytic) < 1e-6:
                skipped += 1
                continue
            rel = abs(analytic - numeric) / max(abs(analytic), abs(numeric))
            tensor_worst = max(tensor_worst, rel)
            checked += 1
        per_tensor[name] = tensor_worst
        worst = max(worst, tensor_worst)
    return GradCheckReport(max_rel_error=worst, checked=checked, skipped=skipped, per_tensor=per_tensor)


def _config_payload(config: TrainConfig) -> dict:
    return {
        "epochs": config.epochs,
        "batch_size": config.batch_size,
        "learning_rate": config.learning_rate,
        "seed": config.seed,
        "mode": config.mode.value,
        "emotion_mode": config.emotion_mode.value,
        "hidden_dim": config.hidden_dim,
        "attn_dim": config.attn_dim,
        "emo_dim": config.emo_dim,
        "embed_dim": config.embed_dim,
        "oov_buckets": config.oov_buckets,
        "l2": config.l2,
    }


def save_checkpoint(path: str | Path, model: TrainedModel) -> None:
    """Self-describing binary: magic, version, JSON header, raw tensors."""
    header = {
        "format_version": _CHECKPOINT_VERSION,
        "train": _config_payload(model.config),
        "encoder": {
            "embed_dim": model.encoder.embed_dim,
            "oov_buckets": model.encoder.oov_buckets,
            "vocab": model.encoder.vocab,
        },
        "tensors": [
            {"name": name, "shape": list(model.params[name].shape), "dtype": "float64"}
            for name in TENSOR_ORDER
        ],
    }
    blob = json.dumps(header, sort_keys=True, separators=(",", ":")).encode("utf-8")
    with open(path, "wb") as fh:
        fh.write(_CHECKPOINT_MAGIC)
        fh.write(struct.pack("<I", _CHECKPOINT_VERSION))
        fh.write(struct.pack("<I", len(blob)))
        fh.write(blob)
        for name in TENSOR_ORDER:
            fh.write(np.ascontiguousarray(model.params[name], dtype="<f8").tobytes())


def load_checkpoint(path: str | Path) -> TrainedModel:
    """Read a checkpoint; version mismatches are rejected, not coerced."""
    with open(path, "rb") as fh:
        magic = fh.read(4)
        if magic != _CHECKPOINT_MAGIC:
            raise CheckpointFormatError(f"{path}: not a model checkpoint")
        (version,) = struct.unpack("<I", fh.read(4))
        if version != _CHECKPOINT_VERSION:
            raise CheckpointFormatError(
                f"{path}: format version {version} unsupported (expected {_CHECKPOINT_VERSION})"
            )
        (header_len,) = struct.unpack("<I", fh.read(4))
        header = json.loads(fh.read(header_len).decode("utf-8"))
        params: dict[str, np.ndarray] = {}
        for meta in header["tensors"]:
            shape = tuple(meta["shape"])
            n_bytes = int(np.prod(shape, dtype=np.int64)) * 8
            raw = fh.read(n_bytes)
            if len(raw) != n_bytes:
                raise CheckpointFormatError(f"{path}: truncated tensor {meta['name']!r}")
            params[meta["name"]] = np.frombuffer(raw, dtype="<f8").reshape(shape).copy()
    train_cfg = header["train"]
    config = TrainConfig(
        epochs=train_cfg["epochs"],
        batch_size=train_cfg["batch_size"],
        learning_rate=train_cfg["learning_rate"],
        seed=train_cfg["seed"],
        mode=InputMode.parse(train_cfg["mode"]),
        emotion_mode=EmotionMode.parse(train_cfg["emotion_mode"]),
        hidden_dim=train_cfg["hidden_dim"],
        attn_dim=train_cfg["attn_dim"],
        emo_dim=train_cfg["emo_dim"],
        embed_dim=train_cfg["embed_dim"],
        oov_buckets=train_cfg["oov_buckets"],
        l2=train_cfg["l2"],
    )
    encoder = EncoderConfig(
        vocab=dict(header["encoder"]["vocab"]),
        embed_dim=header["encoder"]["embed_dim"],
        oov_buckets=header["encoder"]["oov_buckets"],
    )
    missing = [name for name in TENSOR_ORDER if name not in params]
    if missing:
        raise CheckpointFormatError(f"{path}: missing tensors {missing}")
    return TrainedModel(params=params, encoder=encoder, config=config)


def evidence_only_config(config: TrainConfig) -> TrainConfig:
    """Same run with the claim hidden; seed and all sizes unchanged."""
    return replace(config, mode=InputMode.EVIDENCE_ONLY)
