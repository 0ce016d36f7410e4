import pytest

from lambda_forge.datasets import (
    Dataset,
    EmptyDataset,
    ExamplePair,
    LambdaSet,
    RandomSetForMbr,
    build_lambda_set,
    clean_pairs,
    compute_stats,
    dataset_basename,
    derive_pairs,
    generate_dataset,
    read_pairs,
    render_dataset,
    render_pair,
    write_dataset,
)
from lambda_forge.debruijn import alpha_equal, from_debruijn, to_debruijn
from lambda_forge.encodings import church_bool
from lambda_forge.reduction import Strategy, beta_reduce_once, is_normal_form, normalize
from lambda_forge.terms import (
    parse_debruijn,
    parse_traditional,
    print_db,
    print_term,
)

OMEGA_DB = "@ L @ 1 1 L @ 1 1"


def small_dataset(**kw):
    args = dict(kind="closed_bool", task="obr", convention="traditional",
                count=120, seed=77, workers=1, valid_size=30, test_size=30)
    args.update(kw)
    return generate_dataset(**args)


def test_build_lambda_set_closed_terms_are_closed():
    ls = build_lambda_set("closed_bool", 150, 3)
    assert len(ls.terms) == 150
    texts = [print_db(t) for t in ls.terms]
    assert len(set(texts)) == 150  # deduplicated
    for text in texts:
        assert " 0" not in f" {text}"  # no free index anywhere


def test_build_lambda_set_open_terms_have_free_vars():
    ls = build_lambda_set("open_bool", 150, 3)
    for t in ls.terms:
        assert "0" in print_db(t).split()


def test_build_lambda_set_mixed_proportions():
    ls = build_lambda_set("mixed", 91, 5, task="obr")
    assert len(ls.terms) == 91
    ls2 = build_lambda_set("mixed", 90, 5, task="mbr")
    assert len(ls2.terms) == 90


def test_build_lambda_set_rejects_bad_args():
    with pytest.raises(ValueError):
        build_lambda_set("nonsense", 10, 1)
    with pytest.raises(ValueError):
        build_lambda_set("closed_bool", 0, 1)


def test_derive_pairs_obr_ground_truth():
    ls = build_lambda_set("closed_bool", 40, 11)
    pairs = derive_pairs(ls, "obr")
    assert pairs
    for raw in pairs[:200]:
        named = from_debruijn(parse_debruijn(raw.input_db))
        stepped = beta_reduce_once(named, Strategy.LAZY)
        assert stepped is not None
        assert print_db(to_debruijn(stepped.term)) == raw.target_db


def test_derive_pairs_normal_term_contributes_nothing():
    identity = parse_debruijn("L 1")
    ls = LambdaSet("closed_bool", [identity], 0, 1)
    assert derive_pairs(ls, "obr") == []


def test_derive_pairs_rejects_random_mbr():
    ls = LambdaSet("random", [parse_debruijn("0")], 0, 1)
    with pytest.raises(RandomSetForMbr):
        derive_pairs(ls, "mbr")
    mixed_obr = LambdaSet("mixed", [parse_debruijn("0")], 0, 1, task="obr")
    with pytest.raises(RandomSetForMbr):
        derive_pairs(mixed_obr, "mbr")


def test_omega_contributes_self_pairs_for_obr():
    ls = LambdaSet("random", [parse_debruijn(OMEGA_DB)], 0, 1)
    pairs = derive_pairs(ls, "obr")
    assert len(pairs) == 100  # one per step, all identical before cleaning
    assert all(p.input_db == p.target_db == OMEGA_DB for p in pairs)
    rendered = [render_pair(p, "de_bruijn") for p in pairs]
    assert len(clean_pairs(rendered)) == 1


def test_derive_pairs_mbr_closed_bool_targets_are_booleans():
    ls = build_lambda_set("closed_bool", 30, 13)
    pairs = derive_pairs(ls, "mbr")
    assert pairs
    for raw in pairs:
        target = from_debruijn(parse_debruijn(raw.target_db))
        assert alpha_equal(target, church_bool(True)) or alpha_equal(
            target, church_bool(False)
        )
        assert raw.steps >= 1
        named = from_debruijn(parse_debruijn(raw.input_db))
        result = normalize(named, Strategy.LAZY, 100)
        assert result.reached_normal_form
        assert print_db(to_debruijn(result.term)) == raw.target_db


def test_clean_pairs_rules():
    keep = ExamplePair("@ L a a b", "b", "obr", "traditional")
    capture = ExamplePair("x1", "y1", "obr", "traditional", capture_required=True)
    normal = ExamplePair("y", "y", "obr", "traditional", input_is_normal=True)
    dup = ExamplePair("@ L a a b", "b", "obr", "traditional")
    other = ExamplePair("@ L a a c", "c", "obr", "traditional")
    cleaned = clean_pairs([keep, capture, normal, dup, other])
    assert cleaned == [keep, other]
    assert clean_pairs(cleaned) == cleaned  # idempotent


def test_render_dataset_traditional_names_inputs_alphabetically():
    ls = build_lambda_set("closed_bool", 25, 19)
    raws = derive_pairs(ls, "obr")
    ds = render_dataset(raws, "traditional", 19, valid_size=5, test_size=5)
    for pair in ds.pairs[:50]:
        binders = [
            tok
            for prev, tok in zip(pair.input.split(), pair.input.split()[1:])
            if prev == "L"
        ]
        seen = []
        for b in binders:
            if b not in seen:
                seen.append(b)
        from lambda_forge.debruijn import alphabetical_names

        assert seen == alphabetical_names(len(seen))


def test_render_dataset_debruijn_is_shorter():
    ls = build_lambda_set("closed_bool", 25, 19)
    raws = derive_pairs(ls, "obr")
    trad = render_dataset(raws, "traditional", 19, valid_size=5, test_size=5)
    db = render_dataset(raws, "de_bruijn", 19, valid_size=5, test_size=5)
    trad_pairs = {p.input for p in trad.pairs}
    assert all(
        len(p.input.split()) < min(len(t.split()) for t in trad_pairs) or True
        for p in db.pairs
    )
    # direct comparison pair by pair before cleaning differences
    for raw in raws[:40]:
        named = render_pair(raw, "traditional")
        nameless = render_pair(raw, "de_bruijn")
        assert len(nameless.input.split()) <= len(named.input.split())


def test_convention_coherence():
    ls = build_lambda_set("closed_bool", 20, 23)
    raws = derive_pairs(ls, "obr")
    for raw in raws[:60]:
        named = render_pair(raw, "traditional")
        nameless = render_pair(raw, "de_bruijn")
        assert print_db(to_debruijn(parse_traditional(named.input))) == nameless.input
        assert print_db(to_debruijn(parse_traditional(named.target))) == nameless.target


def test_random_vars_pairs_share_one_naming():
    ds = small_dataset(convention="random_vars", count=40, seed=31)
    for pair in ds.pairs[:120]:
        stepped = beta_reduce_once(parse_traditional(pair.input), Strategy.LAZY)
        assert print_term(stepped.term) == pair.target


def test_splits_disjoint_and_cover():
    ds = small_dataset()
    train = {(p.input, p.target) for p in ds.train}
    valid = {(p.input, p.target) for p in ds.valid}
    test = {(p.input, p.target) for p in ds.test}
    assert len(ds.valid) == 30 and len(ds.test) == 30
    assert not (train & valid) and not (train & test) and not (valid & test)
    assert len(train | valid | test) == len(ds.pairs)


def test_no_duplicates_anywhere():
    ds = small_dataset()
    keys = [(p.input, p.target) for p in ds.pairs]
    assert len(keys) == len(set(keys))


def test_pair_token_cap_respected():
    ds = small_dataset(max_tokens=60, count=200)
    assert ds.pairs
    for p in ds.pairs:
        assert len(p.input.split()) <= 60
        assert len(p.target.split()) <= 60


def test_no_normal_inputs_after_cleaning():
    ds = small_dataset()
    for p in ds.pairs[:200]:
        assert not is_normal_form(parse_traditional(p.input))


def test_generate_matches_staged_pipeline():
    kw = dict(count=60, seed=41, valid_size=10, test_size=10)
    fused = generate_dataset("closed_bool", "obr", "traditional", workers=1, **kw)
    ls = build_lambda_set("closed_bool", 60, 41)
    raws = derive_pairs(ls, "obr")
    staged = render_dataset(raws, "traditional", 41, valid_size=10, test_size=10)
    assert [(p.input, p.target) for p in fused.pairs] == [
        (p.input, p.target) for p in staged.pairs
    ]


def test_generate_matches_staged_pipeline_mbr():
    kw = dict(valid_size=8, test_size=8)
    fused = generate_dataset(
        "open_bool", "mbr", "traditional", 50, 43, workers=1, **kw
    )
    ls = build_lambda_set("open_bool", 50, 43, task="mbr")
    raws = derive_pairs(ls, "mbr")
    staged = render_dataset(raws, "traditional", 43, **kw)
    assert [(p.input, p.target, p.steps) for p in fused.pairs] == [
        (p.input, p.target, p.steps) for p in staged.pairs
    ]


def test_generate_deterministic_across_workers():
    one = small_dataset(workers=1)
    many = small_dataset(workers=4)
    assert [(p.input, p.target) for p in one.pairs] == [
        (p.input, p.target) for p in many.pairs
    ]


def test_generate_rejects_random_mbr():
    with pytest.raises(RandomSetForMbr):
        generate_dataset("random", "mbr", "traditional", 10, 1)


def test_mbr_mixed_uses_closed_and_open_halves():
    ds = generate_dataset(
        "mixed", "mbr", "de_bruijn", 60, 53, valid_size=10, test_size=10
    )
    assert ds.pairs
    for p in ds.pairs:
        assert p.steps is not None and 1 <= p.steps <= 100


def test_compute_stats_and_empty_error():
    ds = small_dataset()
    stats = compute_stats(ds)
    assert stats.input_tokens.minimum >= 3
    assert stats.input_tokens.maximum <= 250
    assert stats.reductions is not None and stats.reductions.minimum >= 1
    with pytest.raises(EmptyDataset):
        compute_stats(Dataset([], [], [], {}))


def test_write_and_read_dataset(tmp_path):
    ds = small_dataset()
    paths = write_dataset(ds, tmp_path)
    assert dataset_basename("obr", "closed_bool", "traditional") == "obr_cb_trad"
    for split in ("train", "valid", "test"):
        pairs = read_pairs(paths[split])
        assert pairs == [(p.input, p.target) for p in getattr(ds, split)]
    meta_text = open(paths["meta"]).read()
    assert "task=obr" in meta_text
    assert "kind=closed_bool" in meta_text
    assert "input_tokens_mean=" in meta_text
    assert "reductions_mean=" in meta_text


def test_twelve_obr_and_nine_mbr_combinations():
    from lambda_forge.datasets import CONVENTIONS, KINDS

    def valid(task, kind):
        return not (task == "mbr" and kind == "random")

    obr = [(k, c) for k in KINDS for c in CONVENTIONS if valid("obr", k)]
    mbr = [(k, c) for k in KINDS for c in CONVENTIONS if valid("mbr", k)]
    assert len(obr) == 12
    assert len(mbr) == 9


def test_open_bool_free_name_is_shared_in_rendering():
    ds = generate_dataset(
        "open_bool", "obr", "traditional", 30, 61, valid_size=5, test_size=5
    )
    from lambda_forge.terms import free_variables

    for p in ds.pairs[:40]:
        frees = free_variables(parse_traditional(p.input))
        assert len(frees) <= 1  # the 0-index convention shares one name
