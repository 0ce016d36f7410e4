"""Cross-dataset evaluation table.

Rows are predictors, columns dataset test splits, the last column the
row's average accuracy: the published cross-evaluation layout.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

from .metrics import evaluate

Predictor = Callable[[list[str]], list[str]]


@dataclass(frozen=True)
class CrossEvalTable:
    row_labels: list[str]
    col_labels: list[str]
    accuracies: list[list[float]]  # rows x columns
    row_averages: list[float]


def cross_evaluate(
    predictors: Sequence[tuple[str, Predictor]],
    datasets: Sequence[tuple[str, list[tuple[str, str]]]],
) -> CrossEvalTable:
    """Evaluate every predictor on every dataset's (input, target) pairs.

    A predictor maps a list of input lines to a list of output lines.
    """
    accuracies: list[list[float]] = []
    averages: list[float] = []
    for _, predict in predictors:
        row = []
        for _, pairs in datasets:
            predictions = predict([inp for inp, _ in pairs])
            accuracy, _ = evaluate(predictions, [tgt for _, tgt in pairs])
            row.append(accuracy)
        accuracies.append(row)
        averages.append(sum(row) / len(row))
    return CrossEvalTable(
        [label for label, _ in predictors],
        [label for label, _ in datasets],
        accuracies,
        averages,
    )


def format_table(table: CrossEvalTable) -> str:
    header = [""] + list(table.col_labels) + ["AVERAGE"]
    rows = [header]
    for label, accs, avg in zip(
        table.row_labels, table.accuracies, table.row_averages
    ):
        rows.append(
            [label] + [f"{100 * a:.2f}" for a in accs] + [f"{100 * avg:.2f}"]
        )
    widths = [max(len(r[c]) for r in rows) for c in range(len(header))]
    return "\n".join(
        "  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip()
        for row in rows
    )
