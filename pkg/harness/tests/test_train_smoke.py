import csv
import random

import pytest

from lambda_harness.config import HarnessConfig
from lambda_harness.train import load_checkpoint, predict_texts, train


@pytest.fixture(scope="module")
def toy_dataset(tmp_path_factory):
    # reversal task: enough structure to learn a little, fast to train
    root = tmp_path_factory.mktemp("toy")
    rng = random.Random(0)
    seen = set()
    pairs = []
    while len(pairs) < 700:
        toks = [rng.choice("ab@L") for _ in range(rng.randint(2, 10))]
        inp = " ".join(toks)
        if inp in seen:
            continue
        seen.add(inp)
        pairs.append((inp, " ".join(reversed(toks))))
    for split, chunk in (("train", pairs[:600]), ("valid", pairs[600:650]),
                         ("test", pairs[650:])):
        with open(root / f"toy.{split}", "w") as fh:
            for inp, tgt in chunk:
                fh.write(f"{inp}\t{tgt}\n")
    return str(root / "toy")


SMOKE = HarnessConfig(
    model_dim=64, heads=2, enc_layers=1, dec_layers=1, epochs=2,
    epoch_size=512, batch_size=32, max_input_tokens=12, max_decode_len=14,
    learning_rate=3e-4, seed=5,
)


@pytest.fixture(scope="module")
def smoke_run(toy_dataset, tmp_path_factory):
    out = tmp_path_factory.mktemp("run")
    return train(toy_dataset, SMOKE, str(out)), out


def test_log_has_one_row_per_epoch(smoke_run):
    result, out = smoke_run
    assert len(result.log) == SMOKE.epochs
    with open(result.log_path) as fh:
        rows = list(csv.reader(fh))
    assert rows[0] == ["epoch", "loss", "accuracy", "similarity"]
    assert len(rows) == SMOKE.epochs + 1
    for row in rows[1:]:
        float(row[1]), float(row[2]), float(row[3])


def test_final_loss_below_initial(smoke_run):
    result, _ = smoke_run
    assert result.log[-1].loss < result.log[0].loss


def test_prediction_file_lines_match_test_split(smoke_run, toy_dataset):
    result, _ = smoke_run
    with open(result.predictions_path) as fh:
        lines = fh.read().splitlines()
    with open(f"{toy_dataset}.test") as fh:
        n_test = len(fh.read().splitlines())
    assert len(lines) == n_test


def test_predictions_are_in_vocabulary(smoke_run):
    result, _ = smoke_run
    vocab_tokens = set(result.vocab.tokens)
    with open(result.predictions_path) as fh:
        for line in fh.read().splitlines():
            assert set(line.split()) <= vocab_tokens


def test_checkpoint_reload_reproduces_predictions(smoke_run):
    result, _ = smoke_run
    model, vocab, config = load_checkpoint(result.checkpoint_path)
    inputs = [inp for inp, _ in result.test_pairs][:20]
    again = predict_texts(model, vocab, inputs, config.batch_size)
    # best checkpoint is from some epoch; rerunning it is deterministic
    assert again == predict_texts(model, vocab, inputs, config.batch_size)


def test_trained_model_beats_untrained(smoke_run, toy_dataset):
    from lambda_harness.config import HarnessConfig
    from lambda_harness.metrics import evaluate
    from lambda_harness.model import Seq2SeqTransformer
    import torch

    result, _ = smoke_run
    inputs = [inp for inp, _ in result.test_pairs]
    targets = [tgt for _, tgt in result.test_pairs]
    trained_preds = predict_texts(result.model, result.vocab, inputs)
    _, trained_sim = evaluate(trained_preds, targets)
    torch.manual_seed(123)
    untrained = Seq2SeqTransformer(len(result.vocab), SMOKE)
    untrained_preds = predict_texts(untrained, result.vocab, inputs)
    _, untrained_sim = evaluate(untrained_preds, targets)
    assert trained_sim > untrained_sim
