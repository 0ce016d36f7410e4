"""Evaluation metrics and the symbolic-oracle baseline.

Predictions are scored on exact match and on string similarity,
1 - levenshtein(a, b) / max(len(a), len(b)), over the serialized term
text.  The engine itself serves as a perfect predictor, which pins the
ceiling of every evaluation at 100%.

Run with: python demos/04_metrics_and_oracle.py
"""

from lambda_forge.datasets import generate_dataset
from lambda_forge.metrics import (
    cross_eval_matrix,
    evaluate,
    format_cross_eval,
    levenshtein,
    string_similarity,
    symbolic_predictor,
)

print("levenshtein('kitten', 'sitting') =", levenshtein("kitten", "sitting"))
print("string_similarity =", round(string_similarity("kitten", "sitting"), 4))

# A model can miss exact matches while staying close in characters.
refs = ["L a L b @ a b"] * 8
preds = ["L a L b @ a b"] * 5 + ["L a L b @ b b"] * 3
report = evaluate(preds, refs)
print(f"\naccuracy {report.exact_match_accuracy:.2%}, "
      f"similarity {report.mean_string_similarity:.2%}")

# Cross-dataset table: each row a predictor, each column a dataset,
# last column the row average.  The oracle row sits at 100 everywhere.
datasets = [
    generate_dataset("closed_bool", "obr", "traditional", 30, seed,
                     valid_size=6, test_size=6)
    for seed in (3, 4)
]
oracle = symbolic_predictor("obr", "traditional")
truncator = lambda line: line[: max(1, len(line) - 6)]
matrix = cross_eval_matrix([oracle, truncator], datasets)
print()
print(format_cross_eval(matrix, ["oracle", "truncator"], ["seed 3", "seed 4"]))
