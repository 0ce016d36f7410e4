"""Substitution, redex selection, and beta reduction.

Substitution is deliberately naive: it never renames binders.  When a
naive replacement would capture a free variable of the argument the
result carries ``capture_required=True`` so callers (the dataset
pipeline) can discard it.  On terms respecting the Barendregt
convention the flag stays False and naive substitution is exact.
"""

from __future__ import annotations

from enum import Enum
from typing import NamedTuple, Optional

from .terms import Abs, App, Term, Var, free_variables

BODY = "body"
FUN = "fun"
ARG = "arg"

DEFAULT_MAX_STEPS = 100


class Strategy(Enum):
    LAZY = "lazy"      # leftmost-outermost redex
    STRICT = "strict"  # leftmost-innermost redex


class Redex(NamedTuple):
    path: tuple[str, ...]
    binder: str
    body: Term
    argument: Term


class ReductionOutcome(NamedTuple):
    term: Term
    capture_required: bool


class NormalizeResult(NamedTuple):
    term: Term
    steps: int
    reached_normal_form: bool
    capture_required: bool


def substitute(body: Term, var: str, replacement: Term) -> ReductionOutcome:
    """Replace every free occurrence of ``var`` in ``body`` by ``replacement``.

    Replacement is textual: binders are never renamed.  The outcome is
    flagged when a replaced occurrence sits under a binder whose name is
    free in ``replacement``, i.e. when an alpha step would have been
    needed for a correct substitution.
    """
    fv_repl = free_variables(replacement)
    captured = False

    def go(t: Term, capturing: bool) -> Term:
        nonlocal captured
        cls = t.__class__
        if cls is Var:
            if t.name == var:
                if capturing:
                    captured = True
                return replacement
            return t
        if cls is Abs:
            if t.param == var:
                return t
            new_body = go(t.body, capturing or t.param in fv_repl)
            return t if new_body is t.body else Abs(t.param, new_body)
        new_fun = go(t.fun, capturing)
        new_arg = go(t.arg, capturing)
        if new_fun is t.fun and new_arg is t.arg:
            return t
        return App(new_fun, new_arg)

    return ReductionOutcome(go(body, False), captured)


def find_redex(t: Term, strategy: Strategy = Strategy.LAZY) -> Optional[Redex]:
    """Locate the redex the strategy contracts next, or None on a normal form."""
    if strategy is Strategy.LAZY:
        return _find_lazy(t)
    return _find_strict(t, ())


def _find_lazy(t: Term) -> Optional[Redex]:
    # Pre-order scan: the first App whose function is an Abs is the
    # leftmost-outermost redex.
    stack: list[tuple[Term, tuple[str, ...]]] = [(t, ())]
    while stack:
        node, path = stack.pop()
        cls = node.__class__
        if cls is App:
            fun = node.fun
            if fun.__class__ is Abs:
                return Redex(path, fun.param, fun.body, node.arg)
            stack.append((node.arg, path + (ARG,)))
            stack.append((node.fun, path + (FUN,)))
        elif cls is Abs:
            stack.append((node.body, path + (BODY,)))
    return None


def _find_strict(t: Term, path: tuple[str, ...]) -> Optional[Redex]:
    # Post-order scan (function, argument, node): the first redex found
    # is innermost, with pre-order position breaking ties.
    cls = t.__class__
    if cls is Abs:
        return _find_strict(t.body, path + (BODY,))
    if cls is App:
        found = _find_strict(t.fun, path + (FUN,))
        if found is not None:
            return found
        found = _find_strict(t.arg, path + (ARG,))
        if found is not None:
            return found
        if t.fun.__class__ is Abs:
            return Redex(path, t.fun.param, t.fun.body, t.arg)
    return None


def _replace_at(t: Term, path: tuple[str, ...], new: Term) -> Term:
    spine = []
    node = t
    for sel in path:
        spine.append(node)
        node = getattr(node, sel)
    for parent, sel in zip(reversed(spine), reversed(path)):
        if sel == BODY:
            new = Abs(parent.param, new)
        elif sel == FUN:
            new = App(new, parent.arg)
        else:
            new = App(parent.fun, new)
    return new


def beta_reduce_once(
    t: Term, strategy: Strategy = Strategy.LAZY
) -> Optional[ReductionOutcome]:
    """Contract the strategy's redex, or return None when ``t`` is normal."""
    redex = find_redex(t, strategy)
    if redex is None:
        return None
    contracted = substitute(redex.body, redex.binder, redex.argument)
    return ReductionOutcome(
        _replace_at(t, redex.path, contracted.term), contracted.capture_required
    )


def is_normal_form(t: Term) -> bool:
    return _find_lazy(t) is None


def normalize(
    t: Term,
    strategy: Strategy = Strategy.LAZY,
    max_steps: int = DEFAULT_MAX_STEPS,
) -> NormalizeResult:
    """Reduce until normal form or ``max_steps`` contractions.

    Non-termination is reported, not raised: a capped run comes back
    with ``reached_normal_form=False`` and the last term reached.
    """
    if max_steps < 1:
        raise ValueError("max_steps must be >= 1")
    current = t
    captured = False
    steps = 0
    while steps < max_steps:
        outcome = beta_reduce_once(current, strategy)
        if outcome is None:
            return NormalizeResult(current, steps, True, captured)
        current = outcome.term
        captured = captured or outcome.capture_required
        steps += 1
    return NormalizeResult(current, steps, find_redex(current, strategy) is None, captured)
