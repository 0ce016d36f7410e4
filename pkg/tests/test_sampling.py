import random

import pytest

from lambda_forge.debruijn import binder_count
from lambda_forge.encodings import ConstFalse, ConstTrue, FreeVar, internal_nodes
from lambda_forge.encodings import And, Not, Or
from lambda_forge.sampling import (
    bool_expr_population,
    gen_bool_expr,
    gen_random_term,
    max_internal_nodes,
    _tree_count,
)
from lambda_forge.terms import (
    DbAbs,
    DbApp,
    DbVar,
    parse_debruijn,
    print_db,
    token_count,
)


def expr_depth(e):
    match e:
        case Not(x):
            return 1 + expr_depth(x)
        case And(l, r) | Or(l, r):
            return 1 + max(expr_depth(l), expr_depth(r))
        case _:
            return 0


def brute_trees(n):
    if n == 0:
        return [DbVar(0)]
    out = [DbAbs(t) for t in brute_trees(n - 1)]
    for i in range(n):
        for fun in brute_trees(i):
            for arg in brute_trees(n - 1 - i):
                out.append(DbApp(fun, arg))
    return out


def test_tree_counts_match_enumeration():
    # 1, 1, 2, 4, 9, 21, 51: the Motzkin numbers
    for n in range(7):
        assert _tree_count(n) == len(brute_trees(n))


def test_gen_random_term_determinism():
    a = gen_random_term(random.Random(13), 120)
    b = gen_random_term(random.Random(13), 120)
    assert a == b


def test_gen_random_term_roundtrip_and_budget():
    rng = random.Random(99)
    for _ in range(300):
        t = gen_random_term(rng, 250)
        text = print_db(t)
        assert parse_debruijn(text) == t  # also validates index scoping
        assert token_count(t) + binder_count(t) <= 250  # named rendering fits


def test_gen_random_term_smallest_budget():
    # with max_tokens=3 the node count is 0 or 1; a 0-node draw is the
    # single free leaf
    seen = set()
    for seed in range(40):
        t = gen_random_term(random.Random(seed), 3)
        seen.add(print_db(t))
        assert token_count(t) + binder_count(t) <= 3
    assert "0" in seen


def test_gen_random_term_rejects_tiny_budget():
    with pytest.raises(ValueError):
        gen_random_term(random.Random(0), 2)


def test_free_leaf_under_zero_binders():
    # leaves outside any abstraction must be index 0
    rng = random.Random(5)
    for _ in range(200):
        t = gen_random_term(rng, 40)
        stack = [(t, 0)]
        while stack:
            node, depth = stack.pop()
            if isinstance(node, DbVar):
                if depth == 0:
                    assert node.index == 0
                else:
                    assert 0 <= node.index <= depth
            elif isinstance(node, DbAbs):
                stack.append((node.body, depth + 1))
            else:
                stack.append((node.fun, depth))
                stack.append((node.arg, depth))


def test_p_free_zero_binds_everything_under_binders():
    rng = random.Random(21)
    for _ in range(100):
        t = gen_random_term(rng, 60, p_free=0.0)
        stack = [(t, 0)]
        while stack:
            node, depth = stack.pop()
            if isinstance(node, DbVar) and depth > 0:
                assert node.index >= 1
            elif isinstance(node, DbAbs):
                stack.append((node.body, depth + 1))
            elif isinstance(node, DbApp):
                stack.append((node.fun, depth))
                stack.append((node.arg, depth))


def test_max_internal_nodes_formula():
    assert max_internal_nodes(3) == 1
    assert max_internal_nodes(250) == 124


def test_bool_population_matches_enumeration():
    def closed(n):
        if n == 0:
            return 2
        return closed(n - 1) + 2 * sum(closed(i) * closed(n - 1 - i) for i in range(n))

    # depth 4 does not bind below 3 operator nodes
    assert bool_expr_population(0, False) == 2
    assert bool_expr_population(1, False) == 12
    assert bool_expr_population(2, False) == sum(closed(n) for n in range(3))


def test_gen_bool_expr_caps_and_openness():
    rng = random.Random(17)
    for _ in range(300):
        e = gen_bool_expr(rng, 5, open_expr=False)
        assert internal_nodes(e) <= 5
        assert expr_depth(e) <= 4
    for _ in range(300):
        e = gen_bool_expr(rng, 5, open_expr=True)
        assert internal_nodes(e) <= 5
        has_var = bool(_vars_of(e))
        assert has_var


def _vars_of(e):
    match e:
        case FreeVar(name):
            return {name}
        case Not(x):
            return _vars_of(x)
        case And(l, r) | Or(l, r):
            return _vars_of(l) | _vars_of(r)
        case _:
            return set()


def test_gen_bool_expr_zero_nodes():
    rng = random.Random(2)
    closed = {type(gen_bool_expr(rng, 0, open_expr=False)) for _ in range(50)}
    assert closed == {ConstTrue, ConstFalse}
    opened = {type(gen_bool_expr(rng, 0, open_expr=True)) for _ in range(50)}
    assert opened == {FreeVar}


def test_gen_bool_expr_determinism():
    assert gen_bool_expr(random.Random(4), 5) == gen_bool_expr(random.Random(4), 5)


def test_open_population_excludes_var_free_exprs():
    closed = bool_expr_population(2, False)
    mixed_total = bool_expr_population(2, True)
    # enumerate the 3-leaf population with one identified variable kind
    def mixed(n):
        if n == 0:
            return 3
        return mixed(n - 1) + 2 * sum(mixed(i) * mixed(n - 1 - i) for i in range(n))

    assert mixed_total == sum(mixed(n) for n in range(3)) - closed
