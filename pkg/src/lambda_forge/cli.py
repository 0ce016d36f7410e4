"""Command line interface.

Subcommands: reduce, normalize, convert, generate, stats, eval, dot.
Terms are passed as one quoted argument or, when the argument is
omitted, line by line on stdin (batch mode, order preserving).

Exit codes (stable):
  0  success
  2  usage or validation error
  3  term parse error
  4  step cap reached without a normal form
  5  I/O error
  6  reduce: the input is already a normal form
"""

from __future__ import annotations

import argparse
import os
import random
import sys
from multiprocessing import get_context

from typing import Optional

from .datasets import (
    _derive_seed,
    DEFAULT_SPLIT_SIZE,
    MAX_PAIR_TOKENS,
    REFERENCE_INPUT_SIZES,
    REFERENCE_REDUCTIONS,
    EmptyDataset,
    RandomSetForMbr,
    compute_stats,
    generate_dataset,
    read_pairs,
    write_dataset,
)
from .debruijn import binder_count, from_debruijn, shuffled_names, to_debruijn
from .dot import term_to_dot
from .metrics import (
    CrossEvalMatrix,
    EmptyInput,
    LengthMismatch,
    evaluate,
    format_cross_eval,
    format_report,
    format_report_table,
)
from .reduction import DEFAULT_MAX_STEPS, Strategy, beta_reduce_once, normalize
from .sampling import DEFAULT_MAX_DEPTH, DEFAULT_MAX_INTERNAL, DEFAULT_P_FREE
from .terms import ParseError, parse_debruijn, parse_traditional, print_db, print_term

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_PARSE = 3
EXIT_NO_NORMAL_FORM = 4
EXIT_IO = 5
EXIT_ALREADY_NORMAL = 6

_KIND_ALIASES = {
    "random": "random",
    "cb": "closed_bool",
    "ob": "open_bool",
    "mixed": "mixed",
}
_CONVENTION_ALIASES = {
    "trad": "traditional",
    "randvars": "random_vars",
    "db": "de_bruijn",
}


def _default_seed() -> int:
    return int(os.environ.get("LAMBDA_FORGE_SEED", "0"))


def _parse_named_or_db(text: str, notation: str):
    if notation == "db":
        return from_debruijn(parse_debruijn(text))
    return parse_traditional(text)


def _print_named_or_db(term, notation: str) -> str:
    if notation == "db":
        return print_db(to_debruijn(term))
    return print_term(term)


def _reduce_line(args_tuple):
    text, notation, strategy = args_tuple
    term = _parse_named_or_db(text, notation)
    outcome = beta_reduce_once(term, Strategy(strategy))
    if outcome is None:
        return _print_named_or_db(term, notation), True
    return _print_named_or_db(outcome.term, notation), False


def _normalize_line(args_tuple):
    text, notation, strategy, max_steps = args_tuple
    term = _parse_named_or_db(text, notation)
    result = normalize(term, Strategy(strategy), max_steps)
    return (
        _print_named_or_db(result.term, notation),
        result.steps,
        result.reached_normal_form,
    )


def _convert_line(args_tuple):
    text, src, dst, order, seed, ordinal = args_tuple
    if src == "db":
        db = parse_debruijn(text)
    else:
        db = to_debruijn(parse_traditional(text))
    if dst == "db":
        return print_db(db)
    if order == "random":
        rng = random.Random(_derive_seed(seed, "convert", ordinal))
        names = shuffled_names(binder_count(db) + 1, rng)
    else:
        names = None
    return print_term(from_debruijn(db, names))


def _batch(lines, worker, payloads, workers: int):
    if workers > 1 and len(payloads) > 1:
        with get_context("fork").Pool(workers) as pool:
            return pool.map(worker, payloads, chunksize=16)
    return [worker(p) for p in payloads]


def _term_inputs(args) -> list[str]:
    if args.term is not None:
        return [args.term]
    return [line.strip() for line in sys.stdin if line.strip()]


def _cmd_reduce(args) -> int:
    lines = _term_inputs(args)
    payloads = [(t, args.notation, args.strategy) for t in lines]
    results = _batch(lines, _reduce_line, payloads, args.workers)
    any_normal = False
    for text, was_normal in results:
        print(text)
        any_normal = any_normal or was_normal
    if any_normal:
        print("normal form: no redex to contract", file=sys.stderr)
        return EXIT_ALREADY_NORMAL
    return EXIT_OK


def _cmd_normalize(args) -> int:
    lines = _term_inputs(args)
    payloads = [(t, args.notation, args.strategy, args.max_steps) for t in lines]
    results = _batch(lines, _normalize_line, payloads, args.workers)
    capped = False
    for text, steps, reached in results:
        print(text)
        print(f"steps: {steps}", file=sys.stderr)
        capped = capped or not reached
    if capped:
        print(
            f"step cap {args.max_steps} reached without a normal form",
            file=sys.stderr,
        )
        return EXIT_NO_NORMAL_FORM
    return EXIT_OK


def _cmd_convert(args) -> int:
    lines = _term_inputs(args)
    payloads = [
        (t, getattr(args, "from"), args.to, args.order, args.seed, i)
        for i, t in enumerate(lines)
    ]
    for text in _batch(lines, _convert_line, payloads, args.workers):
        print(text)
    return EXIT_OK


def _cmd_generate(args) -> int:
    kind = _KIND_ALIASES[args.kind]
    convention = _CONVENTION_ALIASES[args.convention]
    ds = generate_dataset(
        kind,
        args.task,
        convention,
        args.count,
        args.seed,
        workers=args.workers,
        max_tokens=args.max_tokens,
        max_steps=args.max_steps,
        max_internal=args.max_internal,
        max_depth=args.max_depth,
        p_free=args.p_free,
        valid_size=args.valid_size,
        test_size=args.test_size,
    )
    paths = write_dataset(ds, args.out)
    stats = compute_stats(ds)
    print(f"train={len(ds.train)} valid={len(ds.valid)} test={len(ds.test)}")
    t = stats.input_tokens
    print(
        f"input tokens: min={t.minimum:.0f} max={t.maximum:.0f} "
        f"mean={t.mean:.2f} stddev={t.stddev:.2f}"
    )
    if stats.reductions is not None:
        r = stats.reductions
        print(
            f"reductions: min={r.minimum:.0f} max={r.maximum:.0f} "
            f"mean={r.mean:.2f} stddev={r.stddev:.2f}"
        )
    print(f"wrote {paths['train']} (.valid/.test/.meta alongside)")
    return EXIT_OK


def _read_sidecar(path: str) -> dict[str, str]:
    out = {}
    if os.path.exists(path):
        with open(path, encoding="utf-8") as fh:
            for line in fh:
                key, _, value = line.strip().partition("=")
                if key:
                    out[key] = value
    return out


def _cmd_stats(args) -> int:
    token_counts: list[int] = []
    sidecar: dict[str, str] = {}
    for path in args.paths:
        for inp, _tgt in read_pairs(path):
            token_counts.append(len(inp.split()))
        base, _, _split = path.rpartition(".")
        sidecar.update(_read_sidecar(f"{base}.meta"))
    if not token_counts:
        print("no pairs found", file=sys.stderr)
        return EXIT_USAGE
    from statistics import fmean, pstdev

    mn, mx = min(token_counts), max(token_counts)
    mean, std = fmean(token_counts), pstdev(token_counts)
    print(f"pairs: {len(token_counts)}")
    print(f"input tokens: min={mn} max={mx} mean={mean:.2f} stddev={std:.2f}")
    red_keys = ("reductions_min", "reductions_max", "reductions_mean")
    if all(k in sidecar for k in red_keys):
        print(
            "reductions: min={} max={} mean={}".format(
                sidecar["reductions_min"],
                sidecar["reductions_max"],
                float(sidecar["reductions_mean"]),
            )
        )
    if args.compare_paper:
        if not (args.task and args.kind):
            print("--compare-paper needs --task and --kind", file=sys.stderr)
            return EXIT_USAGE
        kind = _KIND_ALIASES[args.kind]
        ref = REFERENCE_INPUT_SIZES.get((args.task, kind))
        if ref:
            print(
                f"reference input tokens: min={ref[0]} max={ref[1]} mean={ref[2]}"
            )
        ref_red = REFERENCE_REDUCTIONS.get(kind)
        if ref_red:
            print(
                f"reference reductions: min={ref_red[0]} max={ref_red[1]} "
                f"mean={ref_red[2]}"
            )
    return EXIT_OK


def _read_lines(path: str) -> list[str]:
    with open(path, encoding="utf-8") as fh:
        return [line.rstrip("\n") for line in fh if line.rstrip("\n")]


def _cmd_eval(args) -> int:
    if args.matrix:
        rows: dict[str, list[tuple[str, str, str]]] = {}
        col_order: list[str] = []
        for line in _read_lines(args.matrix):
            row, col, pred_path, ref_path = line.split("\t")
            rows.setdefault(row, []).append((col, pred_path, ref_path))
            if col not in col_order:
                col_order.append(col)
        labels = list(rows)
        reports = []
        averages = []
        for row in labels:
            cells = dict()
            for col, pred_path, ref_path in rows[row]:
                preds = _read_lines(pred_path)
                refs = [t for _, t in read_pairs(ref_path)]
                cells[col] = evaluate(preds, refs)
            ordered = [cells[c] for c in col_order]
            reports.append(ordered)
            averages.append(
                sum(r.exact_match_accuracy for r in ordered) / len(ordered)
            )
        print(format_cross_eval(CrossEvalMatrix(reports, averages), labels, col_order))
        return EXIT_OK
    predictions = _read_lines(args.predictions)
    reference_pairs = read_pairs(args.references)
    references = [tgt if tgt else inp for inp, tgt in reference_pairs]
    report = evaluate(predictions, references)
    print(format_report_table(report))
    print(format_report(report))
    return EXIT_OK


def _cmd_dot(args) -> int:
    if args.notation == "db":
        term = parse_debruijn(args.term)
    else:
        term = parse_traditional(args.term)
    print(term_to_dot(term), end="")
    return EXIT_OK


def _add_term_options(p: argparse.ArgumentParser, strategy: bool = True) -> None:
    p.add_argument("term", nargs="?", help="term text; omit to read lines from stdin")
    p.add_argument("--notation", choices=("trad", "db"), default="trad")
    if strategy:
        p.add_argument("--strategy", choices=("lazy", "strict"), default="lazy")
    p.add_argument("--workers", type=int, default=1, help="batch-mode processes")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lambda-forge",
        description="Lambda calculus engine and reduction-dataset toolchain",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("reduce", help="contract one redex")
    _add_term_options(p)
    p.set_defaults(func=_cmd_reduce)

    p = sub.add_parser("normalize", help="reduce to normal form")
    _add_term_options(p)
    p.add_argument("--max-steps", type=int, default=DEFAULT_MAX_STEPS)
    p.set_defaults(func=_cmd_normalize)

    p = sub.add_parser("convert", help="convert between notations")
    _add_term_options(p, strategy=False)
    p.add_argument("--from", choices=("trad", "db"), default="trad")
    p.add_argument("--to", choices=("trad", "db"), default="db")
    p.add_argument("--order", choices=("alpha", "random"), default="alpha")
    p.add_argument("--seed", type=int, default=_default_seed())
    p.set_defaults(func=_cmd_convert)

    p = sub.add_parser("generate", help="generate a reduction dataset")
    p.add_argument("--kind", choices=tuple(_KIND_ALIASES), required=True)
    p.add_argument("--task", choices=("obr", "mbr"), required=True)
    p.add_argument(
        "--convention", choices=tuple(_CONVENTION_ALIASES), required=True
    )
    p.add_argument("--count", type=int, required=True, help="source term count")
    p.add_argument("--seed", type=int, default=_default_seed())
    p.add_argument("--out", required=True)
    p.add_argument("--max-tokens", type=int, default=MAX_PAIR_TOKENS)
    p.add_argument("--max-steps", type=int, default=DEFAULT_MAX_STEPS)
    p.add_argument("--max-internal", type=int, default=DEFAULT_MAX_INTERNAL)
    p.add_argument("--max-depth", type=int, default=DEFAULT_MAX_DEPTH,
                   help="depth cap for boolean expression trees")
    p.add_argument("--p-free", type=float, default=DEFAULT_P_FREE)
    p.add_argument("--valid-size", type=int, default=DEFAULT_SPLIT_SIZE)
    p.add_argument("--test-size", type=int, default=DEFAULT_SPLIT_SIZE)
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=_cmd_generate)

    p = sub.add_parser("stats", help="summarize dataset files")
    p.add_argument("paths", nargs="+")
    p.add_argument("--compare-paper", action="store_true",
                   help="print the published reference statistics alongside")
    p.add_argument("--task", choices=("obr", "mbr"))
    p.add_argument("--kind", choices=tuple(_KIND_ALIASES))
    p.set_defaults(func=_cmd_stats)

    p = sub.add_parser("eval", help="score predictions against references")
    p.add_argument("--predictions", help="one prediction per line")
    p.add_argument("--references", help="dataset file (input TAB target)")
    p.add_argument(
        "--matrix",
        help="manifest for the cross-eval table: row, column, predictions "
        "path, references path, tab-separated per line",
    )
    p.set_defaults(func=_cmd_eval)

    p = sub.add_parser("dot", help="emit the term tree as DOT")
    p.add_argument("term")
    p.add_argument("--notation", choices=("trad", "db"), default="trad")
    p.set_defaults(func=_cmd_dot)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    sys.setrecursionlimit(20_000)  # deep terms, not deep algorithms
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "eval" and not args.matrix:
        if not (args.predictions and args.references):
            parser.error("eval needs --predictions and --references (or --matrix)")
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (RandomSetForMbr, LengthMismatch, EmptyInput, EmptyDataset, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
