"""Dataset bias measures: how extractive or abstractive is a corpus?

Run: python demos/02_dataset_bias_profile.py
"""

import json
import tempfile
from pathlib import Path

from crosseval import (
    copy_length,
    coverage,
    extract_fragments,
    load_corpus,
    novelty,
    profile_dataset,
    repetition,
    tokenize,
)

# Per-sample view first. Fragments are maximal runs copied verbatim from
# the document; coverage is the fraction of summary tokens inside them.
document = tokenize("the committee met on monday and approved the annual budget")
summary = tokenize("the committee approved a budget")
fragments = extract_fragments(summary, document)
print("fragments:", [(f.start, f.length, f.doc_start) for f in fragments])
print("coverage:", coverage(fragments, len(summary)))
print("copy length:", copy_length(fragments))
print("2-gram novelty:", novelty(summary, document, 2))
print("1-gram repetition:", repetition(summary, 1))

# Now a whole corpus: one near-extractive, one paraphrased.
samples = {
    "extractive_like": [
        ("e1", "shares of the firm rose five percent after earnings beat forecasts",
         "shares of the firm rose five percent"),
        ("e2", "the storm closed roads across the region on friday evening",
         "the storm closed roads across the region"),
    ],
    "abstractive_like": [
        ("a1", "shares of the firm rose five percent after earnings beat forecasts",
         "stock jumped when profits surprised"),
        ("a2", "the storm closed roads across the region on friday evening",
         "weather shut down travel"),
    ],
}

with tempfile.TemporaryDirectory() as tmp:
    for name, rows in samples.items():
        path = Path(tmp) / f"{name}.jsonl"
        with open(path, "w", encoding="utf-8") as f:
            for sid, doc, ref in rows:
                f.write(json.dumps({"id": sid, "document": doc, "reference": ref}) + "\n")
        profile = profile_dataset(load_corpus(path, name))
        print(f"\n{name}:")
        print(f"  coverage      {profile.coverage:.3f}")
        print(f"  copy length   {profile.copy_length:.3f}")
        print(f"  novelty(2)    {profile.novelty[2]:.3f}")
        print(f"  repetition(3) {profile.repetition[3]:.3f}")
        print(f"  fusion score  {profile.fusion_score:.3f}")
