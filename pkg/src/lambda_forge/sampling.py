"""Random source-term generation.

Random lambda terms are sampled as unary-binary trees (unary node =
abstraction, binary node = application, leaf = variable), uniformly
over the trees with a given number of internal nodes; the node count
itself is drawn uniformly from the range whose named rendering fits the
token budget.  Boolean expressions are sampled uniformly over the
population of operator trees within an internal-node cap and a depth
cap, again by exact counting.
"""

from __future__ import annotations

import random
from bisect import bisect_right

from .encodings import And, BoolExpr, ConstFalse, ConstTrue, FreeVar, Not, Or
from .terms import DbAbs, DbApp, DbTerm, DbVar

DEFAULT_P_FREE = 0.25
DEFAULT_MAX_INTERNAL = 5

# ---------------------------------------------------------------------------
# Unary-binary trees, counted by internal nodes (Motzkin recurrence).

_tree_counts: list[int] = [1]
_split_cums: dict[int, list[int]] = {}


def _tree_count(n: int) -> int:
    while len(_tree_counts) <= n:
        k = len(_tree_counts)
        binary = sum(
            _tree_counts[i] * _tree_counts[k - 1 - i] for i in range(k)
        )
        _tree_counts.append(_tree_counts[k - 1] + binary)
    return _tree_counts[n]


def _split_cum(n: int) -> list[int]:
    # Cumulative weights of the binary splits (i, n-1-i).
    cum = _split_cums.get(n)
    if cum is None:
        _tree_count(n)
        total = 0
        cum = []
        for i in range(n):
            total += _tree_counts[i] * _tree_counts[n - 1 - i]
            cum.append(total)
        _split_cums[n] = cum
    return cum


def max_internal_nodes(max_tokens: int) -> int:
    """Largest internal-node count whose named rendering fits max_tokens.

    A tree with n internal nodes serializes to exactly 2n+1 named tokens
    regardless of the unary/binary mix.
    """
    return (max_tokens - 1) // 2


def gen_random_term(
    rng: random.Random,
    max_tokens: int = 250,
    p_free: float = DEFAULT_P_FREE,
) -> DbTerm:
    """Sample a random de Bruijn term within the token budget.

    Each leaf independently becomes a bound variable (uniform among the
    enclosing binders) with probability 1 - p_free, otherwise the free
    index 0; a leaf under zero binders is always free.
    """
    if max_tokens < 3:
        raise ValueError("max_tokens must be >= 3")
    n = rng.randint(0, max_internal_nodes(max_tokens))
    return _build_tree(rng, n, 0, p_free)


def _build_tree(rng: random.Random, n: int, depth: int, p_free: float) -> DbTerm:
    if n == 0:
        if depth == 0 or rng.random() < p_free:
            return DbVar(0)
        return DbVar(rng.randint(1, depth))
    total = _tree_count(n)
    unary = _tree_counts[n - 1]
    r = rng.randrange(total)
    if r < unary:
        return DbAbs(_build_tree(rng, n - 1, depth + 1, p_free))
    i = bisect_right(_split_cum(n), r - unary)
    fun = _build_tree(rng, i, depth, p_free)
    arg = _build_tree(rng, n - 1 - i, depth, p_free)
    return DbApp(fun, arg)


# ---------------------------------------------------------------------------
# Boolean expressions, counted by internal operator nodes and by depth.
# Free-variable leaves count as one leaf kind: the de Bruijn storage
# identifies free variables anyway, so names do not enlarge the
# population.  The depth cap is a calibration knob: at depth 4 the
# largest reduction intermediates stay near the reference dataset
# sizes, while unbounded depth overshoots them.

DEFAULT_MAX_DEPTH = 4

_LEAVES_CLOSED = 2  # true, false
_LEAVES_OPEN = 3  # true, false, free variable

_expr_counts: dict[tuple[int, int, int], int] = {}


def _expr_count(leaves: int, n: int, depth: int) -> int:
    """Expressions with exactly n operator nodes and depth <= depth."""
    if n == 0:
        return leaves
    if depth <= 0:
        return 0
    key = (leaves, n, depth)
    cached = _expr_counts.get(key)
    if cached is None:
        cached = _expr_count(leaves, n - 1, depth - 1)
        cached += 2 * sum(
            _expr_count(leaves, i, depth - 1)
            * _expr_count(leaves, n - 1 - i, depth - 1)
            for i in range(n)
        )
        _expr_counts[key] = cached
    return cached


def bool_expr_population(
    max_internal: int,
    open_exprs: bool,
    max_depth: int = DEFAULT_MAX_DEPTH,
) -> int:
    """Distinct expressions within the node and depth caps.

    Open expressions require at least one free-variable leaf (and
    identify the variables), closed ones draw leaves from {true, false}.
    """
    closed = sum(
        _expr_count(_LEAVES_CLOSED, n, max_depth) for n in range(max_internal + 1)
    )
    if not open_exprs:
        return closed
    mixed = sum(
        _expr_count(_LEAVES_OPEN, n, max_depth) for n in range(max_internal + 1)
    )
    return mixed - closed


def gen_bool_expr(
    rng: random.Random,
    max_internal: int = DEFAULT_MAX_INTERNAL,
    open_expr: bool = False,
    max_depth: int = DEFAULT_MAX_DEPTH,
) -> BoolExpr:
    """Sample uniformly over expressions within the node and depth caps.

    Open sampling rejects variable-free draws, so the result always has
    at least one free variable; fresh names a, b, c, ... go to the
    variable leaves in construction order.
    """
    leaves = _LEAVES_OPEN if open_expr else _LEAVES_CLOSED
    cum = []
    total = 0
    for n in range(max_internal + 1):
        total += _expr_count(leaves, n, max_depth)
        cum.append(total)
    while True:
        n = bisect_right(cum, rng.randrange(total))
        counter = iter(range(10**9))
        expr = _build_expr(rng, n, max_depth, leaves, counter)
        if not open_expr or _has_var(expr):
            return expr


def _build_expr(
    rng: random.Random, n: int, depth: int, leaves: int, counter
) -> BoolExpr:
    if n == 0:
        choice = rng.randrange(leaves)
        if choice == 0:
            return ConstTrue()
        if choice == 1:
            return ConstFalse()
        return FreeVar(_var_name(next(counter)))
    total = _expr_count(leaves, n, depth)
    not_weight = _expr_count(leaves, n - 1, depth - 1)
    r = rng.randrange(total)
    if r < not_weight:
        return Not(_build_expr(rng, n - 1, depth - 1, leaves, counter))
    r -= not_weight
    binary_total = (total - not_weight) // 2
    op_is_and = r < binary_total
    if not op_is_and:
        r -= binary_total
    acc = 0
    for i in range(n):
        acc += _expr_count(leaves, i, depth - 1) * _expr_count(
            leaves, n - 1 - i, depth - 1
        )
        if r < acc:
            left = _build_expr(rng, i, depth - 1, leaves, counter)
            right = _build_expr(rng, n - 1 - i, depth - 1, leaves, counter)
            return And(left, right) if op_is_and else Or(left, right)
    raise AssertionError("split selection out of range")


def _var_name(i: int) -> str:
    letters = "abcdefghijklmnopqrstuvwxyz"
    if i < 26:
        return letters[i]
    return f"{letters[i % 26]}{i // 26}"


def _has_var(e: BoolExpr) -> bool:
    match e:
        case FreeVar(_):
            return True
        case Not(x):
            return _has_var(x)
        case And(l, r) | Or(l, r):
            return _has_var(l) or _has_var(r)
        case _:
            return False
