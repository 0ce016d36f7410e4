"""Exact match and Levenshtein string similarity.

Deliberately the same definitions as the dataset toolchain's evaluator
(similarity = 1 - distance / longer length, over characters of the
serialized term) so epoch logs agree with the external `eval` command
to well past four decimal places.
"""

from __future__ import annotations


def levenshtein(a: str, b: str) -> int:
    if len(a) < len(b):
        a, b = b, a
    if not b:
        return len(a)
    previous = list(range(len(b) + 1))
    for i, ca in enumerate(a, start=1):
        current = [i]
        for j, cb in enumerate(b, start=1):
            best = min(
                previous[j - 1] + (ca != cb),
                previous[j] + 1,
                current[j - 1] + 1,
            )
            current.append(best)
        previous = current
    return previous[-1]


def string_similarity(a: str, b: str) -> float:
    longest = max(len(a), len(b))
    if longest == 0:
        return 1.0
    return 1.0 - levenshtein(a, b) / longest


def evaluate(predictions, references) -> tuple[float, float]:
    """(exact-match accuracy, mean string similarity)."""
    if len(predictions) != len(references):
        raise ValueError("prediction/reference length mismatch")
    if not references:
        raise ValueError("nothing to evaluate")
    matches = 0
    total = 0.0
    for pred, ref in zip(predictions, references):
        if pred == ref:
            matches += 1
            total += 1.0
        else:
            total += string_similarity(pred, ref)
    return matches / len(references), total / len(references)
