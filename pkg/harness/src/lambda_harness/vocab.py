"""Token vocabulary built from the training split only."""

from __future__ import annotations

from typing import Iterable, Sequence

PAD, BOS, EOS, UNK = 0, 1, 2, 3
SPECIALS = ["<pad>", "<bos>", "<eos>", "<unk>"]


class Vocabulary:
    def __init__(self, tokens: Sequence[str]):
        self.tokens = SPECIALS + sorted(set(tokens) - set(SPECIALS))
        self.index = {tok: i for i, tok in enumerate(self.tokens)}
        self.unk_seen = 0

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[str, str]]) -> "Vocabulary":
        seen: set[str] = set()
        for inp, tgt in pairs:
            seen.update(inp.split())
            seen.update(tgt.split())
        return cls(sorted(seen))

    def __len__(self) -> int:
        return len(self.tokens)

    def encode(self, text: str, frame: bool = False) -> list[int]:
        """Token ids; unknown tokens map to UNK and are counted."""
        ids = []
        for tok in text.split():
            idx = self.index.get(tok)
            if idx is None:
                self.unk_seen += 1
                idx = UNK
            ids.append(idx)
        if frame:
            return [BOS] + ids + [EOS]
        return ids

    def decode(self, ids: Iterable[int]) -> str:
        """Inverse of encode up to framing: specials are dropped."""
        out = []
        for i in ids:
            if i == EOS:
                break
            if i in (PAD, BOS):
                continue
            out.append(self.tokens[i])
        return " ".join(out)
