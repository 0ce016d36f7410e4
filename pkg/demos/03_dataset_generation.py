"""Generating one-step and multi-step reduction datasets.

A Lambda Set (pool of source terms) turns into (input, target) pairs:
one pair per lazy reduction step for the one-step task (OBR), or
(term, normal form) for the multi-step task (MBR).  Pairs render in
three naming conventions and are cleaned of alpha-needing pairs,
already-normal inputs, and duplicates.

Run with: python demos/03_dataset_generation.py
"""

import tempfile

from lambda_forge.datasets import (
    build_lambda_set,
    clean_pairs,
    compute_stats,
    derive_pairs,
    generate_dataset,
    render_pair,
    write_dataset,
)
from lambda_forge.terms import print_db

# Step by step: draw terms, derive raw pairs, render one of them.
lambda_set = build_lambda_set("closed_bool", count=50, seed=7)
print("lambda set:", len(lambda_set.terms), "closed boolean terms")
print("first term:", print_db(lambda_set.terms[0])[:60], "...")

raw = derive_pairs(lambda_set, "obr")
print("raw one-step pairs:", len(raw))
for convention in ("traditional", "random_vars", "de_bruijn"):
    import random

    pair = render_pair(raw[0], convention, random.Random(1))
    print(f"  {convention:12s} input: {pair.input[:48]} ...")

# The full pipeline: generate, clean, split, summarize, write.
dataset = generate_dataset(
    "closed_bool", "obr", "traditional", count=400, seed=7,
    valid_size=100, test_size=100, workers=2,
)
stats = compute_stats(dataset)
print("\nfull pipeline:", len(dataset.train), "train /",
      len(dataset.valid), "valid /", len(dataset.test), "test")
t = stats.input_tokens
print(f"input tokens  min={t.minimum:.0f} max={t.maximum:.0f} mean={t.mean:.1f}")
r = stats.reductions
print(f"reductions    min={r.minimum:.0f} max={r.maximum:.0f} mean={r.mean:.1f}")

with tempfile.TemporaryDirectory() as out:
    paths = write_dataset(dataset, out)
    print("\nwrote:", sorted(p.rsplit('/', 1)[1] for p in paths.values()))
    print("line format: input<TAB>target, tokens space-separated")
