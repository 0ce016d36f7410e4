"""Conversion between named terms and de Bruijn terms.

A bound occurrence becomes the count of binders between it and its
binder (innermost binder is 1).  Every free occurrence becomes 0, so
conversion identifies all free variables of an open term; converting
back gives all of them one shared fresh name, which keeps the encoding
invertible in the other direction.
"""

from __future__ import annotations

import random
from itertools import count, islice
from typing import Iterator, Optional, Sequence

from .terms import Abs, App, DbAbs, DbApp, DbTerm, DbVar, Term, Var

_LETTERS = "abcdefghijklmnopqrstuvwxyz"


class NameSupplyExhausted(ValueError):
    """A finite name supply ran out of fresh names."""


def name_supply() -> Iterator[str]:
    """Unbounded fresh names: a..z, a1..z1, a2..z2, ..."""
    for letter in _LETTERS:
        yield letter
    for suffix in count(1):
        for letter in _LETTERS:
            yield f"{letter}{suffix}"


def alphabetical_names(n: int) -> list[str]:
    """The first ``n`` names of the supply in alphabetical order."""
    return list(islice(name_supply(), n))


def shuffled_names(n: int, rng: random.Random) -> list[str]:
    """A seeded random permutation of a prefix of the name supply.

    The permuted prefix always covers at least the plain letters so
    small terms draw from the whole alphabet.
    """
    pool = alphabetical_names(max(n, len(_LETTERS)))
    rng.shuffle(pool)
    return pool


_POP = object()


def to_debruijn(t: Term) -> DbTerm:
    """Convert a named term; lossy on open terms (all free names map to 0)."""
    binders: dict[str, list[int]] = {}
    depth = 0
    fold: list = []  # "L" markers and one-slot App frames
    stack: list = [t]
    while True:
        node = stack.pop()
        cls = node.__class__
        if cls is tuple:  # binder scope ends
            depth -= 1
            binders[node[1]].pop()
            continue
        if cls is Var:
            levels = binders.get(node.name)
            if levels:
                done: DbTerm = DbVar(depth - levels[-1] + 1)
            else:
                done = DbVar(0)
        elif cls is Abs:
            depth += 1
            binders.setdefault(node.param, []).append(depth)
            fold.append("L")
            stack.append((_POP, node.param))
            stack.append(node.body)
            continue
        else:
            fold.append([None])
            stack.append(node.arg)
            stack.append(node.fun)
            continue
        while fold:
            top = fold[-1]
            if top.__class__ is list:
                if top[0] is None:
                    top[0] = done
                    break
                fold.pop()
                done = DbApp(top[0], done)
            else:
                fold.pop()
                done = DbAbs(done)
        else:
            return done


def binder_count(t: Term | DbTerm) -> int:
    """Number of abstractions in the term."""
    n = 0
    stack = [t]
    while stack:
        node = stack.pop()
        cls = node.__class__
        if cls is Abs or cls is DbAbs:
            n += 1
            stack.append(node.body)
        elif cls is App or cls is DbApp:
            stack.append(node.fun)
            stack.append(node.arg)
    return n


def from_debruijn(t: DbTerm, names: Optional[Sequence[str]] = None) -> Term:
    """Name a de Bruijn term.

    Each abstraction takes the next name from ``names`` in pre-order;
    all index-0 occurrences share the single name that follows the
    binder names, so the result respects the Barendregt convention.
    ``names`` defaults to the alphabetical supply; passing a
    permutation from :func:`shuffled_names` gives the random-vars
    naming.  A finite supply that is too small raises
    :class:`NameSupplyExhausted`.
    """
    needed = binder_count(t) + 1
    if names is None:
        names = alphabetical_names(needed)
    elif len(names) < needed:
        raise NameSupplyExhausted(
            f"need {needed} names (binders plus one free), got {len(names)}"
        )
    free_name = names[needed - 1]
    next_index = 0
    env: list[str] = []
    fold: list = []
    stack: list = [t]
    while True:
        node = stack.pop()
        cls = node.__class__
        if node is _POP:
            env.pop()
            continue
        if cls is DbVar:
            idx = node.index
            done: Term = Var(env[-idx] if idx else free_name)
        elif cls is DbAbs:
            name = names[next_index]
            next_index += 1
            env.append(name)
            fold.append(name)
            stack.append(_POP)
            stack.append(node.body)
            continue
        else:
            fold.append([None])
            stack.append(node.arg)
            stack.append(node.fun)
            continue
        while fold:
            top = fold[-1]
            if top.__class__ is list:
                if top[0] is None:
                    top[0] = done
                    break
                fold.pop()
                done = App(top[0], done)
            else:
                fold.pop()
                done = Abs(top, done)
        else:
            return done


def rename_term(t: Term, names: Optional[Sequence[str]] = None) -> Term:
    """Rename a term the way ``from_debruijn(to_debruijn(t), names)`` would.

    One pass instead of two conversions: binders take fresh names in
    pre-order and every free occurrence collapses onto the shared name
    after the binder names.
    """
    needed = binder_count(t) + 1
    if names is None:
        names = alphabetical_names(needed)
    elif len(names) < needed:
        raise NameSupplyExhausted(
            f"need {needed} names (binders plus one free), got {len(names)}"
        )
    free_name = names[needed - 1]
    next_index = 0
    scopes: dict[str, list[str]] = {}
    fold: list = []
    stack: list = [t]
    while True:
        node = stack.pop()
        cls = node.__class__
        if cls is tuple:  # binder scope ends
            scopes[node[1]].pop()
            continue
        if cls is Var:
            bound = scopes.get(node.name)
            done: Term = Var(bound[-1] if bound else free_name)
        elif cls is Abs:
            fresh = names[next_index]
            next_index += 1
            scopes.setdefault(node.param, []).append(fresh)
            fold.append(fresh)
            stack.append((_POP, node.param))
            stack.append(node.body)
            continue
        else:
            fold.append([None])
            stack.append(node.arg)
            stack.append(node.fun)
            continue
        while fold:
            top = fold[-1]
            if top.__class__ is list:
                if top[0] is None:
                    top[0] = done
                    break
                fold.pop()
                done = App(top[0], done)
            else:
                fold.pop()
                done = Abs(top, done)
        else:
            return done


def alpha_equal(a: Term, b: Term) -> bool:
    """Structural equality of the de Bruijn forms.

    Exact alpha-equivalence on closed terms; on open terms it is the
    coarser relation that identifies all free variables, per the
    0-index convention.
    """
    return to_debruijn(a) == to_debruijn(b)
