"""Harness command line: train, predict, cross-eval."""

from __future__ import annotations

import argparse
import sys

from .config import PRESETS, HarnessConfig, load_config, save_config
from .cross_eval import cross_evaluate, format_table
from .data import load_pairs
from .train import load_checkpoint, predict_texts, train


def _resolve_config(args) -> HarnessConfig:
    config = PRESETS[args.preset]
    if args.config:
        config = load_config(args.config, base=config)
    overrides = {}
    for field in ("epochs", "epoch_size", "batch_size", "seed"):
        value = getattr(args, field, None)
        if value is not None:
            overrides[field] = value
    if args.learning_rate is not None:
        overrides["learning_rate"] = args.learning_rate
    if overrides:
        from dataclasses import replace

        config = replace(config, **overrides)
    return config


def _cmd_train(args) -> int:
    config = _resolve_config(args)
    result = train(args.data, config, args.out)
    save_config(config, f"{args.out}/config.txt")
    best = result.log[result.best_epoch - 1]
    print(
        f"best epoch {result.best_epoch}: acc {best.accuracy:.4f} "
        f"sim {best.similarity:.4f}"
    )
    print(f"log: {result.log_path}")
    print(f"checkpoint: {result.checkpoint_path}")
    print(f"test predictions: {result.predictions_path}")
    if any(result.skipped.values()):
        print(f"skipped over-window pairs: {result.skipped}", file=sys.stderr)
    return 0


def _cmd_predict(args) -> int:
    model, vocab, config = load_checkpoint(args.checkpoint)
    if args.inputs.endswith(".txt"):
        inputs = [l for l in open(args.inputs, encoding="utf-8").read().splitlines() if l]
    else:
        inputs = [inp for inp, _ in load_pairs(args.inputs)]
    predictions = predict_texts(model, vocab, inputs, config.batch_size)
    with open(args.out, "w", encoding="utf-8") as fh:
        fh.write("\n".join(predictions) + "\n")
    print(f"wrote {len(predictions)} predictions to {args.out}")
    return 0


def _sidecar_value(path: str, key: str):
    base = path.rsplit(".", 1)[0]
    try:
        with open(f"{base}.meta", encoding="utf-8") as fh:
            for line in fh:
                k, _, v = line.strip().partition("=")
                if k == key:
                    return v
    except OSError:
        return None
    return None


def _cmd_cross_eval(args) -> int:
    predictors = []
    for spec in args.model:
        label, path = spec.split("=", 1)
        model, vocab, config = load_checkpoint(path)
        predictors.append(
            (label, lambda lines, m=model, v=vocab, c=config: predict_texts(m, v, lines, c.batch_size))
        )
    datasets = []
    conventions = set()
    for spec in args.dataset:
        label, path = spec.split("=", 1)
        convention = _sidecar_value(path, "convention")
        if convention:
            conventions.add(convention)
        datasets.append((label, load_pairs(path)))
    if len(conventions) > 1:
        print(f"error: datasets mix conventions {sorted(conventions)}",
              file=sys.stderr)
        return 2
    print(format_table(cross_evaluate(predictors, datasets)))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="lambda-harness")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("train", help="train on a dataset prefix")
    p.add_argument("--data", required=True, help="path prefix of .train/.test files")
    p.add_argument("--out", required=True)
    p.add_argument("--preset", choices=tuple(PRESETS), default="desk")
    p.add_argument("--config", help="key=value config file overriding the preset")
    p.add_argument("--epochs", type=int)
    p.add_argument("--epoch-size", dest="epoch_size", type=int)
    p.add_argument("--batch-size", dest="batch_size", type=int)
    p.add_argument("--learning-rate", dest="learning_rate", type=float)
    p.add_argument("--seed", type=int)
    p.set_defaults(func=_cmd_train)

    p = sub.add_parser("predict", help="greedy-decode a file of inputs")
    p.add_argument("--checkpoint", required=True)
    p.add_argument("--inputs", required=True,
                   help="dataset file, or .txt with one input per line")
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_predict)

    p = sub.add_parser("cross-eval", help="cross-dataset accuracy table")
    p.add_argument("--model", action="append", required=True,
                   help="label=checkpoint.pt (repeatable)")
    p.add_argument("--dataset", action="append", required=True,
                   help="label=dataset.test (repeatable)")
    p.set_defaults(func=_cmd_cross_eval)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
