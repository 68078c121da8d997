"""Tour of the corpus layer: records, label collapse, wire format, splits.

Run with: python3 demos/01_corpus_and_labels.py
"""

from __future__ import annotations

import tempfile
from collections import Counter
from pathlib import Path

from claimlab import (
    ClaimRecord,
    RawLabel,
    Snippet,
    Source,
    collapse_label,
    emit,
    generate_synthetic,
    ingest,
    split,
)

print("=== Label collapse ===")
print("Five source labels fold onto three classes:")
for raw in RawLabel:
    print(f"  {raw.value:>13} -> {collapse_label(raw).name}")

print()
print("=== A record and its wire form ===")
record = ClaimRecord.build(
    "demo-1",
    "the reservoir is full",
    RawLabel.MOSTLY_TRUE,
    [
        Snippet(rank=2, text="Officials said levels neared capacity"),
        Snippet(rank=1, text="The reservoir reached 97 percent."),
    ],
    Source.SNOPES,
)
print(f"claim: {record.claim_text!r}")
print(f"raw label {record.raw_label.value!r} collapses to {record.label.name}")
print("snippets arrive sorted by rank:", [s.rank for s in record.snippets])

with tempfile.TemporaryDirectory() as tmp:
    path = Path(tmp) / "demo.jsonl"
    emit([record], path)
    print("one JSON object per line, byte-stable:")
    print(" ", path.read_text(encoding="utf-8").strip())
    assert ingest(path) == [record], "emit then ingest is the identity"
    print("ingest(emit(records)) == records holds")

print()
print("=== Synthetic corpus ===")
records = generate_synthetic(n=60, seed=7)
print(f"generated {len(records)} records; label counts:",
      dict(Counter(r.label.name for r in records)))
example = records[0]
print(f"example claim: {example.claim_text!r} -> {example.label.name}")
for snippet in example.snippets[:4]:
    print(f"  [{snippet.rank}] {snippet.text}")
print("  ...")
print("The label is a function of claim AND evidence together: count the")
print("snippets asserting the claimed stance of the claimed entity.")
print("Five matches = True, zero = False, a 3-2 split = Mixture. Evidence")
print("text alone carries no label signal, so an evidence-only model is")
print("stuck near chance while a claim-reading model is not.")

print()
print("=== Stratified splits ===")
dataset = split(records, seed=7)
for name, part in (("train", dataset.train), ("dev", dataset.dev), ("test", dataset.test)):
    counts = Counter(r.label.name for r in part)
    print(f"  {name:>5}: {len(part):>3} records {dict(counts)}")
