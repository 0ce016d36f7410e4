"""Training configuration.

Two presets: the full-scale one mirrors the published hyperparameters
(6+6 layers, 1024 dims, 8 heads, lr 1e-4, 50 epochs of 50000 samples,
250-token inputs); the desk preset shrinks everything to run on a CPU
in minutes.  ``epoch_size`` counts samples drawn per epoch, with
replacement, independent of the distinct-pair count (the full-scale
runs drew 2.5x their dataset size over training).

Configs load from and save to plain ``key=value`` files.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, replace


@dataclass(frozen=True)
class HarnessConfig:
    enc_layers: int = 2
    dec_layers: int = 2
    model_dim: int = 128
    heads: int = 4
    learning_rate: float = 1e-4
    epochs: int = 10
    epoch_size: int = 20_000
    batch_size: int = 64
    max_input_tokens: int = 60
    seed: int = 0
    decode: str = "greedy"
    max_decode_len: int = 96


DESK_PRESET = HarnessConfig()

PAPER_PRESET = HarnessConfig(
    enc_layers=6,
    dec_layers=6,
    model_dim=1024,
    heads=8,
    learning_rate=1e-4,
    epochs=50,
    epoch_size=50_000,
    batch_size=64,
    max_input_tokens=250,
    max_decode_len=256,
)

PRESETS = {"desk": DESK_PRESET, "paper": PAPER_PRESET}

_FIELD_TYPES = {f: type(v) for f, v in asdict(DESK_PRESET).items()}


def save_config(config: HarnessConfig, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        for key, value in asdict(config).items():
            fh.write(f"{key}={value}\n")


def load_config(path, base: HarnessConfig | None = None) -> HarnessConfig:
    """Read a key=value file; unknown keys are rejected."""
    overrides = {}
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            key, _, value = line.partition("=")
            key = key.strip()
            if key not in _FIELD_TYPES:
                raise ValueError(f"unknown config field {key!r}")
            kind = _FIELD_TYPES[key]
            overrides[key] = value.strip() if kind is str else kind(value)
    return replace(base or DESK_PRESET, **overrides)
