"""Train the paired models and read the claim-use diagnostic.

This reproduces the headline benchmark: on a 300-record synthetic corpus
whose labels require the claim, a claim+evidence model scores high while
its evidence-only twin is stuck near chance, so

    delta = f1(claim + evidence) - f1(evidence only)

comes out large. Takes about a minute of CPU.

Run with: python3 demos/04_train_and_delta.py
"""

from __future__ import annotations

import time

from claimlab import (
    EmotionMode,
    generate_synthetic,
    render_report_text,
    run_experiment,
    split,
    synthetic_benchmark_config,
)
from claimlab.preprocess import parse_pipeline

print("generating 300 synthetic records (seed 7) and splitting 80/10/10...")
dataset = split(generate_synthetic(n=300, seed=7), seed=7)
config = synthetic_benchmark_config(seed=7)
print(f"training twin models: {config.epochs} epochs, batch {config.batch_size}, "
      f"lr {config.learning_rate}, l2 {config.l2}")

started = time.monotonic()
result = run_experiment(
    "synthetic", dataset, parse_pipeline("none"), EmotionMode.NONE, config
)
elapsed = time.monotonic() - started

print(f"done in {elapsed:.1f}s")
print()
print(render_report_text([result]), end="")
print()
print(f"claim+evidence macro-F1: {result.score_ce:.4f}")
print(f"evidence-only macro-F1:  {result.score_e:.4f}  (3-class chance is about 0.33)")
print(f"delta:                   {result.delta:.4f}")
print()
print("A large positive delta certifies the model is actually reading the")
print("claim. A headline score with near-zero delta would mean the model")
print("rates evidence snippets alone, which on this corpus cannot beat")
print("chance by construction.")
