"""Evaluation metrics: exact match and Levenshtein string similarity.

Similarity is computed on the character sequence of the serialized
term, spaces included:

    similarity(a, b) = 1 - levenshtein(a, b) / max(len(a), len(b))

with the empty/empty corner defined as 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional, Sequence

from .debruijn import from_debruijn, to_debruijn
from .reduction import DEFAULT_MAX_STEPS, Strategy, beta_reduce_once, normalize
from .terms import parse_debruijn, parse_traditional, print_db, print_term


class LengthMismatch(ValueError):
    pass


class EmptyInput(ValueError):
    pass


@dataclass(frozen=True)
class EvalReport:
    n: int
    exact_match_accuracy: float
    mean_string_similarity: float
    per_example: Optional[list[tuple[float, bool]]] = None


def levenshtein(a: str, b: str) -> int:
    """Minimum number of character insertions, deletions, substitutions."""
    if len(a) < len(b):
        a, b = b, a  # keep the rolling row small
    if not b:
        return len(a)
    previous = list(range(len(b) + 1))
    for i, ca in enumerate(a, start=1):
        current = [i]
        append = current.append
        for j, cb in enumerate(b, start=1):
            cost_sub = previous[j - 1] + (ca != cb)
            cost_del = previous[j] + 1
            cost_ins = current[j - 1] + 1
            best = cost_sub if cost_sub < cost_del else cost_del
            append(best if best < cost_ins else cost_ins)
        previous = current
    return previous[-1]


def string_similarity(a: str, b: str) -> float:
    """1 minus the edit distance over the longer length; 1 for two empties."""
    longest = max(len(a), len(b))
    if longest == 0:
        return 1.0
    return 1.0 - levenshtein(a, b) / longest


def evaluate(
    predictions: Sequence[str],
    references: Sequence[str],
    keep_per_example: bool = False,
) -> EvalReport:
    """Exact-match accuracy and mean string similarity over aligned lists."""
    if len(predictions) != len(references):
        raise LengthMismatch(
            f"{len(predictions)} predictions vs {len(references)} references"
        )
    if not references:
        raise EmptyInput("nothing to evaluate")
    matches = 0
    total_sim = 0.0
    per_example: list[tuple[float, bool]] = []
    for pred, ref in zip(predictions, references):
        matched = pred == ref
        sim = 1.0 if matched else string_similarity(pred, ref)
        matches += matched
        total_sim += sim
        if keep_per_example:
            per_example.append((sim, matched))
    n = len(references)
    return EvalReport(
        n,
        matches / n,
        total_sim / n,
        per_example if keep_per_example else None,
    )


Predictor = Callable[[str], str]


def symbolic_predictor(
    task: str,
    convention: str,
    max_steps: int = DEFAULT_MAX_STEPS,
) -> Predictor:
    """The engine itself as a predictor: a perfect-oracle baseline."""
    debruijn = convention == "de_bruijn"

    def predict(line: str) -> str:
        if debruijn:
            term = from_debruijn(parse_debruijn(line))
        else:
            term = parse_traditional(line)
        if task == "obr":
            outcome = beta_reduce_once(term, Strategy.LAZY)
            result = term if outcome is None else outcome.term
        else:
            result = normalize(term, Strategy.LAZY, max_steps).term
        return print_db(to_debruijn(result)) if debruijn else print_term(result)

    return predict


@dataclass(frozen=True)
class CrossEvalMatrix:
    reports: list[list[EvalReport]]  # rows: models, columns: datasets
    row_averages: list[float]  # mean accuracy per model


def _test_pairs(dataset) -> list[tuple[str, str]]:
    if hasattr(dataset, "test"):
        return [(p.input, p.target) for p in dataset.test]
    return list(dataset)


def cross_eval_matrix(
    models: Sequence[Predictor],
    datasets: Sequence,
) -> CrossEvalMatrix:
    """Evaluate every model on every dataset's test split.

    A dataset is either a Dataset (its test split is used) or a plain
    sequence of (input, target) pairs.
    """
    split_pairs = [_test_pairs(ds) for ds in datasets]
    reports: list[list[EvalReport]] = []
    averages: list[float] = []
    for model in models:
        row = []
        for pairs in split_pairs:
            predictions = [model(inp) for inp, _ in pairs]
            row.append(evaluate(predictions, [tgt for _, tgt in pairs]))
        reports.append(row)
        averages.append(sum(r.exact_match_accuracy for r in row) / len(row))
    return CrossEvalMatrix(reports, averages)


def format_report(report: EvalReport) -> str:
    """Machine-readable key=value lines."""
    return (
        f"n={report.n}\n"
        f"exact_match_accuracy={report.exact_match_accuracy:.6f}\n"
        f"mean_string_similarity={report.mean_string_similarity:.6f}"
    )


def format_report_table(report: EvalReport) -> str:
    return (
        f"ACC (%): {100 * report.exact_match_accuracy:.2f}   "
        f"STR SIM (%): {100 * report.mean_string_similarity:.2f}   "
        f"(n={report.n})"
    )


def format_cross_eval(
    matrix: CrossEvalMatrix,
    row_labels: Sequence[str],
    col_labels: Sequence[str],
) -> str:
    """Rows are models, columns datasets, last column the row AVERAGE."""
    header = [""] + list(col_labels) + ["AVERAGE"]
    rows = [header]
    for label, row, avg in zip(row_labels, matrix.reports, matrix.row_averages):
        cells = [f"{100 * r.exact_match_accuracy:.2f}" for r in row]
        rows.append([label] + cells + [f"{100 * avg:.2f}"])
    widths = [max(len(r[c]) for r in rows) for c in range(len(header))]
    lines = [
        "  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip()
        for row in rows
    ]
    return "\n".join(lines)
