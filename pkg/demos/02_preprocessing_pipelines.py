"""Tour of the four transforms and why their order matters.

Run with: python3 demos/02_preprocessing_pipelines.py
"""

from __future__ import annotations

from claimlab.preprocess import Resources, parse_pipeline, run_pipeline

resources = Resources.bundled()


def show(text: str, spec: str) -> None:
    out = run_pipeline(text, parse_pipeline(spec), resources)
    print(f"  [{spec or 'none':<9}] {text!r} -> {out!r}")


print("=== NEG: negation becomes its antonym ===")
show("I am not happy", "neg")
show("He is not tall and not heavy", "neg")
show("never not happy", "neg")
print("  (a cue with no antonym-bearing word in its window stays put)")
show("not the brightest idea", "neg")

print()
print("=== POS: keep only nouns, verbs, adjectives ===")
show("It was a very good day for all of us, frankly.", "pos")

print()
print("=== STOP: drop function words ===")
anaphora = (
    "Together, we will make America strong again. We will make America "
    "wealthy again. We will make America proud again."
)
show(anaphora, "stop")
print("  The repeated 'we will ... again' scaffolding, a strong style cue,")
print("  disappears; the content words survive.")

print()
print("=== STEM: strip inflection ===")
show("Motoring caresses Happy cats", "stem")

print()
print("=== Order sensitivity ===")
print("Tag-consuming steps re-tag the current stream, and one tagging rule")
print("is position-dependent: a capitalized word away from a sentence start")
print("reads as a proper noun. Deleting a leading stopword first moves the")
print("next word into sentence-initial position and changes its tag.")
text = "The Surprisingly loud crowd cheered"
show(text, "pos,stop")
show(text, "stop,pos")

print()
print("=== Stacking everything ===")
show("we will make America proud again", "stop,stem")
show("I am not happy about the delays", "neg,pos,stop,stem")
