"""Lambda Sets and the reduction-dataset pipeline.

A Lambda Set is a pool of source terms stored canonically in de Bruijn
form: random terms, encoded closed/open boolean expressions, or a mixed
pool interleaving those kinds in equal proportion (thirds for the
one-step task, closed/open halves for the multi-step task).

From a Lambda Set the pipeline derives (input, target) pairs:

  OBR  one pair per step of the lazy reduction walk, up to the step cap;
  MBR  one pair per term, (term, normal form), dropping terms that do
       not normalize within the cap.

Pairs render in three naming conventions.  De Bruijn pairs serialize
the stored forms directly.  For the named conventions every pair is
named independently: the input gets fresh binder names (alphabetical,
or a seeded shuffle for random-vars) and the target is recomputed as
the true reduct of that named input, so input and target share one
naming.  Cleaning then removes pairs whose derivation needed an alpha
rename, pairs whose input is already normal, and duplicates.

Generation is sharded: every shard owns a seed derived from the dataset
seed and its index, so output is byte-identical across worker counts.
"""

from __future__ import annotations

import hashlib
import math
import random
from dataclasses import dataclass
from multiprocessing import get_context
from statistics import fmean, pstdev
from typing import Iterable, Optional, Sequence

from .debruijn import (
    binder_count,
    from_debruijn,
    rename_term,
    shuffled_names,
    to_debruijn,
)
from .encodings import encode_bool_expr
from .reduction import (
    DEFAULT_MAX_STEPS,
    Strategy,
    beta_reduce_once,
    normalize,
)
from .sampling import (
    DEFAULT_MAX_DEPTH,
    DEFAULT_MAX_INTERNAL,
    DEFAULT_P_FREE,
    bool_expr_population,
    gen_bool_expr,
    gen_random_term,
)
from .terms import DbTerm, Term, parse_debruijn, print_db, print_term, token_count

KINDS = ("random", "closed_bool", "open_bool", "mixed")
TASKS = ("obr", "mbr")
CONVENTIONS = ("traditional", "random_vars", "de_bruijn")

KIND_FILE_TOKEN = {
    "random": "random",
    "closed_bool": "cb",
    "open_bool": "ob",
    "mixed": "mixed",
}
CONVENTION_FILE_TOKEN = {
    "traditional": "trad",
    "random_vars": "randvars",
    "de_bruijn": "db",
}

MAX_PAIR_TOKENS = 250
DEFAULT_SPLIT_SIZE = 10_000

# Reference dataset statistics the generator is calibrated against:
# (min, max, mean) of input token counts per task and kind, and of the
# per-term reduction counts per kind.  Matches are expected within a
# tolerance band, not exactly, since the upstream generator that
# produced the reference numbers is not fully specified.
REFERENCE_INPUT_SIZES: dict[tuple[str, str], tuple[int, int, float]] = {
    ("obr", "random"): (5, 249, 127.2),
    ("obr", "closed_bool"): (9, 193, 97.6),
    ("obr", "open_bool"): (5, 181, 66.46),
    ("obr", "mixed"): (5, 249, 86.93),
    ("mbr", "closed_bool"): (9, 193, 97.55),
    ("mbr", "open_bool"): (5, 181, 66.46),
    ("mbr", "mixed"): (5, 181, 77.96),
}
REFERENCE_REDUCTIONS: dict[str, tuple[int, int, float]] = {
    "closed_bool": (3, 100, 18.8),
    "open_bool": (1, 100, 18.88),
    "mixed": (2, 100, 18.82),
}
STATS_TOLERANCE = 0.15

_SHARD_DRAWS = 1024  # generation draws per shard
_WALK_SHARD = 256  # terms walked per shard


class RandomSetForMbr(ValueError):
    """Random terms may not normalize, so they cannot source MBR pairs."""


class EmptyDataset(ValueError):
    pass


@dataclass(frozen=True, slots=True)
class ExamplePair:
    input: str
    target: str
    task: str
    convention: str
    steps: Optional[int] = None  # reductions to normal form, MBR only
    capture_required: bool = False
    input_is_normal: bool = False


@dataclass(frozen=True, slots=True)
class RawPair:
    """A derived pair in canonical de Bruijn text, before rendering."""

    input_db: str
    target_db: str
    task: str
    steps: Optional[int] = None
    capture_required: bool = False
    input_is_normal: bool = False


@dataclass
class LambdaSet:
    kind: str
    terms: list[DbTerm]
    seed: int
    target_count: int
    # Mixed pools interleave the task-relevant source kinds, so the kind
    # alone does not determine the contents.
    task: str = "obr"


@dataclass(frozen=True)
class StatSummary:
    minimum: float
    maximum: float
    mean: float
    stddev: float


@dataclass(frozen=True)
class DatasetStats:
    input_tokens: StatSummary
    reductions: Optional[StatSummary]


@dataclass
class Dataset:
    train: list[ExamplePair]
    valid: list[ExamplePair]
    test: list[ExamplePair]
    metadata: dict

    @property
    def pairs(self) -> list[ExamplePair]:
        return self.train + self.valid + self.test


def _derive_seed(seed: int, *parts) -> int:
    text = ":".join([str(seed), *map(str, parts)])
    return int.from_bytes(hashlib.sha256(text.encode()).digest()[:8], "big")


def _named_tokens(db: DbTerm) -> int:
    # Named rendering spends one extra token per abstraction.
    return token_count(db) + binder_count(db)


# ---------------------------------------------------------------------------
# Lambda Set generation (phase 1: draw and deduplicate source terms)


def _mixed_quotas(count: int, task: str) -> dict[str, int]:
    kinds = ("random", "closed_bool", "open_bool") if task == "obr" else (
        "closed_bool",
        "open_bool",
    )
    base = count // len(kinds)
    rem = count % len(kinds)
    return {k: base + (1 if i < rem else 0) for i, k in enumerate(kinds)}


def _draw_budget(kind: str, count: int, max_internal: int, max_depth: int) -> int:
    if kind == "random":
        return int(count * 1.10) + 64
    population = bool_expr_population(max_internal, kind == "open_bool", max_depth)
    if count > 0.95 * population:
        raise ValueError(
            f"cannot draw {count} distinct {kind} terms: population is {population}"
        )
    expected = -population * math.log1p(-count / population)
    return int(expected * 1.15) + 64


def _gen_shard(args) -> list[str]:
    (seed, kind, shard, draws, max_tokens, p_free, max_internal, max_depth) = args
    rng = random.Random(_derive_seed(seed, "gen", kind, shard))
    out: list[str] = []
    for _ in range(draws):
        if kind == "random":
            db = gen_random_term(rng, max_tokens, p_free)
        else:
            expr = gen_bool_expr(
                rng, max_internal, open_expr=kind == "open_bool", max_depth=max_depth
            )
            db = to_debruijn(encode_bool_expr(expr))
            if _named_tokens(db) > max_tokens:
                continue  # resample: the encoding outgrew the cap
        out.append(print_db(db))
    return out


def _map_shards(worker, payloads: list, workers: int) -> list:
    if workers <= 1 or len(payloads) <= 1:
        return [worker(p) for p in payloads]
    ctx = get_context("fork")
    with ctx.Pool(workers) as pool:
        return pool.map(worker, payloads, chunksize=1)


def _draw_kind_terms(
    kind: str,
    count: int,
    seed: int,
    *,
    max_tokens: int,
    p_free: float,
    max_internal: int,
    max_depth: int,
    workers: int,
) -> list[str]:
    """Distinct de Bruijn texts for one source kind, in stable draw order."""
    seen: set[str] = set()
    result: list[str] = []
    next_shard = 0
    budget = _draw_budget(kind, count, max_internal, max_depth)
    for _round in range(4):
        shards = []
        while budget > 0:
            shards.append(
                (seed, kind, next_shard, min(_SHARD_DRAWS, budget), max_tokens,
                 p_free, max_internal, max_depth)
            )
            budget -= _SHARD_DRAWS
            next_shard += 1
        for chunk in _map_shards(_gen_shard, shards, workers):
            for text in chunk:
                if len(result) >= count:
                    break
                if text not in seen:
                    seen.add(text)
                    result.append(text)
        if len(result) >= count:
            break
        budget = max((count - len(result)) * 3, 1024)
    return result


def _draw_terms(
    kind: str,
    count: int,
    seed: int,
    task: str,
    *,
    max_tokens: int,
    p_free: float,
    max_internal: int,
    max_depth: int,
    workers: int,
) -> list[str]:
    if kind != "mixed":
        return _draw_kind_terms(
            kind, count, seed, max_tokens=max_tokens, p_free=p_free,
            max_internal=max_internal, max_depth=max_depth, workers=workers,
        )
    quotas = _mixed_quotas(count, task)
    streams = {
        k: _draw_kind_terms(
            k, q, seed, max_tokens=max_tokens, p_free=p_free,
            max_internal=max_internal, max_depth=max_depth, workers=workers,
        )
        for k, q in quotas.items()
    }
    # Interleave round-robin so the kinds stay in proportion everywhere.
    out: list[str] = []
    kinds = list(quotas)
    for i in range(max(len(s) for s in streams.values())):
        for k in kinds:
            if i < len(streams[k]):
                out.append(streams[k][i])
    return out


def build_lambda_set(
    kind: str,
    count: int,
    seed: int,
    task: str = "obr",
    *,
    max_tokens: int = MAX_PAIR_TOKENS,
    p_free: float = DEFAULT_P_FREE,
    max_internal: int = DEFAULT_MAX_INTERNAL,
    max_depth: int = DEFAULT_MAX_DEPTH,
    workers: int = 1,
) -> LambdaSet:
    """Draw ``count`` distinct source terms of the given kind.

    Terms are deduplicated on their de Bruijn text and capped so even
    the fattest rendering stays within ``max_tokens``.  The task only
    matters for the mixed kind, whose sources it selects.
    """
    if kind not in KINDS:
        raise ValueError(f"unknown kind {kind!r}")
    if task not in TASKS:
        raise ValueError(f"unknown task {task!r}")
    if count < 1:
        raise ValueError("count must be >= 1")
    texts = _draw_terms(
        kind, count, seed, task, max_tokens=max_tokens, p_free=p_free,
        max_internal=max_internal, max_depth=max_depth, workers=workers,
    )
    return LambdaSet(kind, [parse_debruijn(t) for t in texts], seed, count, task)


# ---------------------------------------------------------------------------
# Pair derivation (phase 2: walk the lazy reduction sequence)


def _obr_walk(u: Term, max_steps: int, cap_tokens: int):
    """Step pairs of the lazy walk as named terms.

    Emits (current, next, capture) while both sides fit the token cap;
    stops at the normal form, the step cap, or the first oversized term
    (everything after it would be unusable as an input anyway).
    Returns the pair list and the number of reductions performed.
    """
    pairs = []
    current = u
    steps = 0
    fits = token_count(current) <= cap_tokens
    while steps < max_steps:
        outcome = beta_reduce_once(current, Strategy.LAZY)
        if outcome is None:
            break
        steps += 1
        nxt = outcome.term
        nxt_fits = token_count(nxt) <= cap_tokens
        if fits and nxt_fits:
            pairs.append((current, nxt, outcome.capture_required))
        elif not nxt_fits:
            break
        current = nxt
        fits = nxt_fits
    return pairs, steps


def derive_pairs(
    ls: LambdaSet,
    task: str,
    *,
    max_steps: int = DEFAULT_MAX_STEPS,
    max_tokens: int = MAX_PAIR_TOKENS,
) -> list[RawPair]:
    """Derive raw OBR/MBR pairs from every term of the set, in order."""
    if task not in TASKS:
        raise ValueError(f"unknown task {task!r}")
    if task == "mbr":
        if ls.kind == "random":
            raise RandomSetForMbr("random terms may not have a normal form")
        if ls.kind == "mixed" and ls.task != "mbr":
            raise RandomSetForMbr("this mixed set interleaves random terms")
    pairs: list[RawPair] = []
    for db in ls.terms:
        pairs.extend(_derive_term(print_db(db), task, max_steps, max_tokens)[0])
    return pairs


def _derive_term(db_text: str, task: str, max_steps: int, max_tokens: int):
    """Raw pairs and the walk length for one source term."""
    u = from_debruijn(parse_debruijn(db_text))
    out: list[RawPair] = []
    if task == "obr":
        named_pairs, steps = _obr_walk(u, max_steps, max_tokens)
        prev_db = db_text
        prev_term = u
        for current, nxt, captured in named_pairs:
            if current is not prev_term:
                prev_db = print_db(to_debruijn(current))
            nxt_db = print_db(to_debruijn(nxt))
            out.append(RawPair(prev_db, nxt_db, "obr", None, captured, False))
            prev_db, prev_term = nxt_db, nxt
        return out, steps
    result = normalize(u, Strategy.LAZY, max_steps)
    if not result.reached_normal_form:
        return out, result.steps
    if token_count(result.term) <= max_tokens and token_count(u) <= max_tokens:
        out.append(
            RawPair(
                db_text,
                print_db(to_debruijn(result.term)),
                "mbr",
                result.steps,
                result.capture_required,
                result.steps == 0,
            )
        )
    return out, result.steps


# ---------------------------------------------------------------------------
# Rendering, cleaning, splitting


def render_pair(
    raw: RawPair,
    convention: str,
    naming_rng: Optional[random.Random] = None,
    max_steps: int = DEFAULT_MAX_STEPS,
) -> ExamplePair:
    """Render one raw pair; input and target share a single naming."""
    if convention == "de_bruijn":
        return ExamplePair(
            raw.input_db, raw.target_db, raw.task, convention, raw.steps,
            raw.capture_required, raw.input_is_normal,
        )
    input_db = parse_debruijn(raw.input_db)
    if convention == "traditional":
        names = None
    elif convention == "random_vars":
        if naming_rng is None:
            raise ValueError("random_vars rendering needs a seeded rng")
        names = shuffled_names(binder_count(input_db) + 1, naming_rng)
    else:
        raise ValueError(f"unknown convention {convention!r}")
    named_input = from_debruijn(input_db, names)
    captured = raw.capture_required
    if raw.input_is_normal:
        named_target = named_input
    elif raw.task == "obr":
        outcome = beta_reduce_once(named_input, Strategy.LAZY)
        if outcome is None:
            raise AssertionError("raw OBR pair with a normal input")
        named_target = outcome.term
        captured = captured or outcome.capture_required
    else:
        result = normalize(named_input, Strategy.LAZY, max_steps)
        named_target = result.term
        captured = captured or result.capture_required
    return ExamplePair(
        print_term(named_input), print_term(named_target), raw.task,
        convention, raw.steps, captured, raw.input_is_normal,
    )


def clean_pairs(pairs: Iterable[ExamplePair]) -> list[ExamplePair]:
    """Apply the cleaning rules, preserving the order of survivors.

    Drops pairs whose derivation would have needed an alpha rename,
    pairs whose input is already a normal form, and exact duplicates of
    the serialized (input, target) pair.
    """
    seen: set[tuple[str, str]] = set()
    out: list[ExamplePair] = []
    for p in pairs:
        if p.capture_required or p.input_is_normal:
            continue
        key = (p.input, p.target)
        if key in seen:
            continue
        seen.add(key)
        out.append(p)
    return out


def _split(
    pairs: list[ExamplePair],
    seed: int,
    valid_size: int,
    test_size: int,
) -> tuple[list[ExamplePair], list[ExamplePair], list[ExamplePair]]:
    shuffled = list(pairs)
    random.Random(_derive_seed(seed, "split")).shuffle(shuffled)
    v = min(valid_size, len(shuffled) // 3)
    t = min(test_size, len(shuffled) // 3)
    return shuffled[v + t :], shuffled[:v], shuffled[v : v + t]


def render_dataset(
    pairs: Sequence[RawPair],
    convention: str,
    seed: int,
    *,
    valid_size: int = DEFAULT_SPLIT_SIZE,
    test_size: int = DEFAULT_SPLIT_SIZE,
    max_steps: int = DEFAULT_MAX_STEPS,
    metadata: Optional[dict] = None,
) -> Dataset:
    """Render raw pairs in one convention, clean, and split."""
    if convention not in CONVENTIONS:
        raise ValueError(f"unknown convention {convention!r}")
    rendered = []
    for i, raw in enumerate(pairs):
        rng = None
        if convention == "random_vars":
            rng = random.Random(_derive_seed(seed, "name", i))
        rendered.append(render_pair(raw, convention, rng, max_steps))
    cleaned = clean_pairs(rendered)
    train, valid, test = _split(cleaned, seed, valid_size, test_size)
    meta = dict(metadata or {})
    meta.update(
        convention=convention,
        seed=seed,
        counts={"train": len(train), "valid": len(valid), "test": len(test)},
    )
    return Dataset(train, valid, test, meta)


# ---------------------------------------------------------------------------
# Fused sharded pipeline (what the CLI uses)


def _pair_names(input_term, seed, shard, t_idx, s_idx):
    rng = random.Random(_derive_seed(seed, "name", shard, t_idx, s_idx))
    return shuffled_names(binder_count(input_term) + 1, rng)


def _walk_shard(args):
    (seed, task, convention, max_steps, max_tokens, shard, texts) = args
    pair_rows: list[tuple] = []
    walk_lens: list[int] = []
    randvars = convention == "random_vars"
    if convention == "de_bruijn":
        # The stored forms serialize directly; no renaming pass needed.
        for db_text in texts:
            raws, steps = _derive_term(db_text, task, max_steps, max_tokens)
            walk_lens.append(steps)
            pair_rows.extend(
                (r.input_db, r.target_db, r.steps, r.capture_required,
                 r.input_is_normal)
                for r in raws
            )
        return pair_rows, walk_lens
    for t_idx, db_text in enumerate(texts):
        u = from_debruijn(parse_debruijn(db_text))
        if task == "obr":
            named_pairs, steps = _obr_walk(u, max_steps, max_tokens)
            walk_lens.append(steps)
            for s_idx, (current, _nxt, captured) in enumerate(named_pairs):
                names = (
                    _pair_names(current, seed, shard, t_idx, s_idx)
                    if randvars
                    else None
                )
                canon = rename_term(current, names)
                outcome = beta_reduce_once(canon, Strategy.LAZY)
                pair_rows.append(
                    (
                        print_term(canon),
                        print_term(outcome.term),
                        None,
                        captured or outcome.capture_required,
                        False,
                    )
                )
        else:
            result = normalize(u, Strategy.LAZY, max_steps)
            walk_lens.append(result.steps)
            if not result.reached_normal_form:
                continue
            if token_count(u) > max_tokens or token_count(result.term) > max_tokens:
                continue
            names = _pair_names(u, seed, shard, t_idx, 0) if randvars else None
            canon = rename_term(u, names)
            renamed = normalize(canon, Strategy.LAZY, max_steps)
            pair_rows.append(
                (
                    print_term(canon),
                    print_term(renamed.term),
                    result.steps,
                    result.capture_required or renamed.capture_required,
                    result.steps == 0,
                )
            )
    return pair_rows, walk_lens


def generate_dataset(
    kind: str,
    task: str,
    convention: str,
    count: int,
    seed: int,
    *,
    workers: int = 1,
    max_tokens: int = MAX_PAIR_TOKENS,
    max_steps: int = DEFAULT_MAX_STEPS,
    max_internal: int = DEFAULT_MAX_INTERNAL,
    max_depth: int = DEFAULT_MAX_DEPTH,
    p_free: float = DEFAULT_P_FREE,
    valid_size: int = DEFAULT_SPLIT_SIZE,
    test_size: int = DEFAULT_SPLIT_SIZE,
) -> Dataset:
    """Full pipeline: Lambda Set -> pairs -> rendered, cleaned dataset.

    Deterministic for a given (kind, task, convention, count, seed)
    regardless of the worker count.
    """
    if kind not in KINDS:
        raise ValueError(f"unknown kind {kind!r}")
    if task not in TASKS:
        raise ValueError(f"unknown task {task!r}")
    if convention not in CONVENTIONS:
        raise ValueError(f"unknown convention {convention!r}")
    if task == "mbr" and kind == "random":
        raise RandomSetForMbr("random terms may not have a normal form")
    texts = _draw_terms(
        kind, count, seed, task, max_tokens=max_tokens, p_free=p_free,
        max_internal=max_internal, max_depth=max_depth, workers=workers,
    )
    shards = [
        (seed, task, convention, max_steps, max_tokens, i, texts[pos : pos + _WALK_SHARD])
        for i, pos in enumerate(range(0, len(texts), _WALK_SHARD))
    ]
    rows: list[tuple] = []
    walk_lens: list[int] = []
    for pair_rows, lens in _map_shards(_walk_shard, shards, workers):
        rows.extend(pair_rows)
        walk_lens.extend(lens)
    pairs = [
        ExamplePair(inp, tgt, task, convention, steps, cap, normal)
        for (inp, tgt, steps, cap, normal) in rows
    ]
    cleaned = clean_pairs(pairs)
    train, valid, test = _split(cleaned, seed, valid_size, test_size)
    metadata = {
        "kind": kind,
        "task": task,
        "convention": convention,
        "seed": seed,
        "target_count": count,
        "source_terms": len(texts),
        "max_tokens": max_tokens,
        "max_steps": max_steps,
        "counts": {"train": len(train), "valid": len(valid), "test": len(test)},
        "reduction_counts": [s for s in walk_lens if s > 0],
    }
    if kind in ("closed_bool", "open_bool", "mixed"):
        metadata["max_internal"] = max_internal
        metadata["max_depth"] = max_depth
    if kind in ("random", "mixed"):
        metadata["p_free"] = p_free
    return Dataset(train, valid, test, metadata)


# ---------------------------------------------------------------------------
# Statistics and files


def _summary(values: Sequence[float]) -> StatSummary:
    return StatSummary(min(values), max(values), fmean(values), pstdev(values))


def compute_stats(ds: Dataset) -> DatasetStats:
    """Input-size and reduction-count statistics.

    Input sizes come from the stored pairs.  Reduction counts are the
    walk lengths of the source terms that produced at least one
    reduction; for MBR these equal the per-pair step counts.
    """
    pairs = ds.pairs
    if not pairs:
        raise EmptyDataset("no pairs to summarize")
    tokens = [len(p.input.split()) for p in pairs]
    reductions: Optional[StatSummary] = None
    if pairs[0].task == "mbr":
        steps = [p.steps for p in pairs if p.steps is not None]
        if steps:
            reductions = _summary(steps)
    counts = ds.metadata.get("reduction_counts")
    if reductions is None and counts:
        reductions = _summary(counts)
    return DatasetStats(_summary(tokens), reductions)


def dataset_basename(task: str, kind: str, convention: str) -> str:
    return f"{task}_{KIND_FILE_TOKEN[kind]}_{CONVENTION_FILE_TOKEN[convention]}"


def write_dataset(ds: Dataset, out_dir) -> dict[str, str]:
    """Write the train/valid/test files and the key=value sidecar."""
    import os

    meta = ds.metadata
    base = dataset_basename(meta["task"], meta["kind"], meta["convention"])
    os.makedirs(out_dir, exist_ok=True)
    paths = {}
    for split in ("train", "valid", "test"):
        path = os.path.join(out_dir, f"{base}.{split}")
        with open(path, "w", encoding="utf-8") as fh:
            for p in getattr(ds, split):
                fh.write(f"{p.input}\t{p.target}\n")
        paths[split] = path
    stats = compute_stats(ds) if ds.pairs else None
    lines = [
        f"task={meta['task']}",
        f"kind={meta['kind']}",
        f"convention={meta['convention']}",
        f"seed={meta['seed']}",
        f"target_count={meta.get('target_count', '')}",
        f"source_terms={meta.get('source_terms', '')}",
        f"max_tokens={meta.get('max_tokens', '')}",
        f"max_steps={meta.get('max_steps', '')}",
        f"train={len(ds.train)}",
        f"valid={len(ds.valid)}",
        f"test={len(ds.test)}",
    ]
    if stats is not None:
        t = stats.input_tokens
        lines += [
            f"input_tokens_min={t.minimum:.0f}",
            f"input_tokens_max={t.maximum:.0f}",
            f"input_tokens_mean={t.mean:.6f}",
            f"input_tokens_stddev={t.stddev:.6f}",
        ]
        if stats.reductions is not None:
            r = stats.reductions
            lines += [
                f"reductions_min={r.minimum:.0f}",
                f"reductions_max={r.maximum:.0f}",
                f"reductions_mean={r.mean:.6f}",
                f"reductions_stddev={r.stddev:.6f}",
            ]
    meta_path = os.path.join(out_dir, f"{base}.meta")
    with open(meta_path, "w", encoding="utf-8") as fh:
        fh.write("\n".join(lines) + "\n")
    paths["meta"] = meta_path
    return paths


def read_pairs(path) -> list[tuple[str, str]]:
    """Read a dataset split file back into (input, target) pairs."""
    out = []
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            line = line.rstrip("\n")
            if not line:
                continue
            inp, _, tgt = line.partition("\t")
            out.append((inp, tgt))
    return out
