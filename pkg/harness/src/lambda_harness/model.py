"""Transformer encoder-decoder with greedy decoding."""

from __future__ import annotations

import torch
from torch import nn


def _causal_mask(n: int, device) -> torch.Tensor:
    return torch.triu(torch.ones(n, n, dtype=torch.bool, device=device), diagonal=1)

from .config import HarnessConfig
from .vocab import BOS, EOS, PAD


class Seq2SeqTransformer(nn.Module):
    def __init__(self, vocab_size: int, config: HarnessConfig):
        super().__init__()
        d = config.model_dim
        max_len = max(config.max_input_tokens, config.max_decode_len) + 2
        self.config = config
        self.embed = nn.Embedding(vocab_size, d, padding_idx=PAD)
        self.positions = nn.Embedding(max_len, d)
        self.transformer = nn.Transformer(
            d_model=d,
            nhead=config.heads,
            num_encoder_layers=config.enc_layers,
            num_decoder_layers=config.dec_layers,
            dim_feedforward=4 * d,
            dropout=0.1,
            batch_first=True,
        )
        # the nested-tensor fast path is a moving prototype; keep the
        # plain, deterministic code path
        self.transformer.encoder.use_nested_tensor = False
        self.out = nn.Linear(d, vocab_size)

    def _embed(self, ids: torch.Tensor) -> torch.Tensor:
        pos = torch.arange(ids.size(1), device=ids.device)
        return self.embed(ids) + self.positions(pos)[None, :, :]

    def forward(self, src: torch.Tensor, tgt_in: torch.Tensor) -> torch.Tensor:
        """Logits over the next target token at every position."""
        causal = _causal_mask(tgt_in.size(1), src.device)
        hidden = self.transformer(
            self._embed(src),
            self._embed(tgt_in),
            tgt_mask=causal,
            src_key_padding_mask=src == PAD,
            tgt_key_padding_mask=tgt_in == PAD,
            memory_key_padding_mask=src == PAD,
        )
        return self.out(hidden)

    @torch.no_grad()
    def greedy_decode(self, src: torch.Tensor, max_len: int | None = None) -> torch.Tensor:
        """Batched greedy decoding; deterministic given the checkpoint."""
        self.eval()
        if max_len is None:
            max_len = self.config.max_decode_len
        src_pad = src == PAD
        memory = self.transformer.encoder(
            self._embed(src), src_key_padding_mask=src_pad
        )
        batch = src.size(0)
        ys = torch.full((batch, 1), BOS, dtype=torch.long, device=src.device)
        finished = torch.zeros(batch, dtype=torch.bool, device=src.device)
        for _ in range(max_len):
            causal = _causal_mask(ys.size(1), src.device)
            hidden = self.transformer.decoder(
                self._embed(ys),
                memory,
                tgt_mask=causal,
                memory_key_padding_mask=src_pad,
            )
            logits = self.out(hidden[:, -1])
            nxt = logits.argmax(dim=-1)
            nxt = torch.where(finished, torch.full_like(nxt, EOS), nxt)
            ys = torch.cat([ys, nxt[:, None]], dim=1)
            finished = finished | (nxt == EOS)
            if bool(finished.all()):
                break
        return ys[:, 1:]
