"""Dataset file loading and batching.

Reads the toolchain's text format verbatim: one pair per line, input
and target token sequences separated by a single tab.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

import torch

from .vocab import PAD, Vocabulary


def load_pairs(path) -> list[tuple[str, str]]:
    pairs = []
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            line = line.rstrip("\n")
            if not line:
                continue
            inp, _, tgt = line.partition("\t")
            pairs.append((inp, tgt))
    return pairs


@dataclass
class FilterResult:
    kept: list[tuple[str, str]]
    skipped: int


def filter_pairs(
    pairs, max_input_tokens: int, max_target_tokens: int
) -> FilterResult:
    """Drop pairs that overflow the model's windows, counting them."""
    kept = []
    skipped = 0
    for inp, tgt in pairs:
        if len(inp.split()) <= max_input_tokens and len(tgt.split()) < max_target_tokens:
            kept.append((inp, tgt))
        else:
            skipped += 1
    return FilterResult(kept, skipped)


def _pad_block(rows: list[list[int]]) -> torch.Tensor:
    width = max(len(r) for r in rows)
    return torch.tensor(
        [r + [PAD] * (width - len(r)) for r in rows], dtype=torch.long
    )


def encode_batch(
    pairs: list[tuple[str, str]], vocab: Vocabulary
) -> tuple[torch.Tensor, torch.Tensor]:
    """(source ids, framed target ids) padded to the batch maxima."""
    src = _pad_block([vocab.encode(inp) for inp, _ in pairs])
    tgt = _pad_block([vocab.encode(tgt, frame=True) for _, tgt in pairs])
    return src, tgt


def epoch_batches(
    pairs: list[tuple[str, str]],
    vocab: Vocabulary,
    epoch_size: int,
    batch_size: int,
    rng: random.Random,
):
    """Seeded sample of epoch_size pairs (with replacement), batched."""
    sampled = [pairs[rng.randrange(len(pairs))] for _ in range(epoch_size)]
    for lo in range(0, len(sampled), batch_size):
        yield encode_batch(sampled[lo : lo + batch_size], vocab)
