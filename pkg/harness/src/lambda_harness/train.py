"""Training loop: teacher forcing, per-epoch test evaluation, CSV log."""

from __future__ import annotations

import csv
import os
import random
import time
from dataclasses import asdict, dataclass

import torch
from torch import nn

from .config import HarnessConfig
from .data import FilterResult, encode_batch, epoch_batches, filter_pairs, load_pairs
from .metrics import evaluate
from .model import Seq2SeqTransformer
from .vocab import PAD, Vocabulary


@dataclass
class EpochRow:
    epoch: int
    loss: float
    accuracy: float
    similarity: float


@dataclass
class TrainResult:
    log: list[EpochRow]
    best_epoch: int
    checkpoint_path: str
    log_path: str
    predictions_path: str
    skipped: dict[str, int]
    vocab: Vocabulary
    model: Seq2SeqTransformer
    test_pairs: list[tuple[str, str]]


def _load_split(prefix: str, split: str, config: HarnessConfig) -> FilterResult:
    pairs = load_pairs(f"{prefix}.{split}")
    return filter_pairs(pairs, config.max_input_tokens, config.max_decode_len)


def predict_texts(
    model: Seq2SeqTransformer,
    vocab: Vocabulary,
    inputs: list[str],
    batch_size: int = 64,
) -> list[str]:
    """Greedy predictions, one output line per input line."""
    out: list[str] = []
    for lo in range(0, len(inputs), batch_size):
        chunk = [(text, "") for text in inputs[lo : lo + batch_size]]
        src, _ = encode_batch(chunk, vocab)
        ids = model.greedy_decode(src)
        out.extend(vocab.decode(row.tolist()) for row in ids)
    return out


def train(data_prefix: str, config: HarnessConfig, out_dir: str) -> TrainResult:
    """Train on <prefix>.train, evaluating each epoch on <prefix>.test.

    Writes the per-epoch CSV log (epoch, loss, accuracy, similarity),
    the best-accuracy checkpoint, and the final-epoch test predictions
    in the shared one-line-per-example format.
    """
    os.makedirs(out_dir, exist_ok=True)
    torch.manual_seed(config.seed)
    torch.set_num_threads(os.cpu_count() or 2)

    train_split = _load_split(data_prefix, "train", config)
    test_split = _load_split(data_prefix, "test", config)
    if not train_split.kept or not test_split.kept:
        raise ValueError("no pairs fit the configured token windows")
    skipped = {"train": train_split.skipped, "test": test_split.skipped}

    vocab = Vocabulary.from_pairs(train_split.kept)
    model = Seq2SeqTransformer(len(vocab), config)
    optimizer = torch.optim.Adam(model.parameters(), lr=config.learning_rate)
    criterion = nn.CrossEntropyLoss(ignore_index=PAD)

    test_inputs = [inp for inp, _ in test_split.kept]
    test_targets = [tgt for _, tgt in test_split.kept]

    log: list[EpochRow] = []
    best = (-1.0, 0)
    checkpoint_path = os.path.join(out_dir, "checkpoint.pt")
    predictions_path = os.path.join(out_dir, "predictions_test.txt")
    log_path = os.path.join(out_dir, "log.csv")

    for epoch in range(1, config.epochs + 1):
        started = time.monotonic()
        model.train()
        rng = random.Random(f"{config.seed}:epoch:{epoch}")
        total_loss = 0.0
        batches = 0
        for src, tgt in epoch_batches(
            train_split.kept, vocab, config.epoch_size, config.batch_size, rng
        ):
            logits = model(src, tgt[:, :-1])
            loss = criterion(
                logits.reshape(-1, logits.size(-1)), tgt[:, 1:].reshape(-1)
            )
            optimizer.zero_grad()
            loss.backward()
            optimizer.step()
            total_loss += float(loss.detach())
            batches += 1

        predictions = predict_texts(model, vocab, test_inputs, config.batch_size)
        accuracy, similarity = evaluate(predictions, test_targets)
        row = EpochRow(epoch, total_loss / batches, accuracy, similarity)
        log.append(row)
        print(
            f"epoch {epoch:3d}  loss {row.loss:.4f}  acc {accuracy:.4f}  "
            f"sim {similarity:.4f}  ({time.monotonic()-started:.0f}s)",
            flush=True,
        )
        if accuracy > best[0]:
            best = (accuracy, epoch)
            torch.save(
                {
                    "model": model.state_dict(),
                    "tokens": vocab.tokens,
                    "config": asdict(config),
                    "epoch": epoch,
                },
                checkpoint_path,
            )
        with open(predictions_path, "w", encoding="utf-8") as fh:
            fh.write("\n".join(predictions) + "\n")

    with open(log_path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(["epoch", "loss", "accuracy", "similarity"])
        for row in log:
            writer.writerow(
                [row.epoch, f"{row.loss:.6f}", f"{row.accuracy:.6f}",
                 f"{row.similarity:.6f}"]
            )

    return TrainResult(
        log, best[1], checkpoint_path, log_path, predictions_path,
        skipped, vocab, model, test_split.kept,
    )


def load_checkpoint(path: str) -> tuple[Seq2SeqTransformer, Vocabulary, HarnessConfig]:
    payload = torch.load(path, map_location="cpu", weights_only=False)
    config = HarnessConfig(**payload["config"])
    vocab = Vocabulary(payload["tokens"])
    model = Seq2SeqTransformer(len(vocab), config)
    model.load_state_dict(payload["model"])
    model.eval()
    return model, vocab, config
