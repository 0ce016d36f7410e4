"""Lambda term representations and the prefix token syntax.

Two ASTs live here: named terms (Var/Abs/App) and nameless de Bruijn
terms (DbVar/DbAbs/DbApp).  Both serialize to a prefix token string:
abstraction is the reserved token ``L`` (followed by the binder name in
the named syntax), application is ``@``, and leaves are variable names
or decimal indices.  Index 0 marks a free variable; bound indices count
enclosing binders starting at 1.

Parsing and printing are iterative so token length, not recursion
depth, is the only practical input limit.
"""

from __future__ import annotations

import re
from typing import NamedTuple, Union


class Var(NamedTuple):
    name: str


class Abs(NamedTuple):
    param: str
    body: "Term"


class App(NamedTuple):
    fun: "Term"
    arg: "Term"


Term = Union[Var, Abs, App]


class DbVar(NamedTuple):
    index: int


class DbAbs(NamedTuple):
    body: "DbTerm"


class DbApp(NamedTuple):
    fun: "DbTerm"
    arg: "DbTerm"


DbTerm = Union[DbVar, DbAbs, DbApp]

ABS_TOKEN = "L"
APP_TOKEN = "@"

_NAME_RE = re.compile(r"[a-z]+[0-9]*\Z")
_NAT_RE = re.compile(r"0\Z|[1-9][0-9]*\Z")


def is_variable_name(token: str) -> bool:
    """True for lowercase-letter tokens with an optional digit suffix."""
    return _NAME_RE.match(token) is not None


class ParseError(ValueError):
    """Malformed prefix token text.  ``position`` is the token index."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (token {position})")
        self.position = position


class TruncatedTerm(ParseError):
    pass


class TrailingTokens(ParseError):
    pass


class InvalidToken(ParseError):
    pass


class MalformedBinder(ParseError):
    pass


class IndexOutOfScope(ParseError):
    pass


def parse_traditional(text: str) -> Term:
    """Parse named prefix syntax: term := var | "L" var term | "@" term term."""
    tokens = text.split()
    # Stack frames: a str is an Abs binder waiting for its body, a
    # one-slot list is an App waiting for its function then argument.
    stack: list = []
    pos = 0
    n = len(tokens)
    while True:
        if pos >= n:
            raise TruncatedTerm("term ends mid-production", pos)
        tok = tokens[pos]
        if tok == APP_TOKEN:
            stack.append([None])
            pos += 1
            continue
        if tok == ABS_TOKEN:
            if pos + 1 >= n:
                raise MalformedBinder("abstraction is missing its binder", pos + 1)
            param = tokens[pos + 1]
            if not is_variable_name(param):
                raise MalformedBinder(f"invalid binder {param!r}", pos + 1)
            stack.append(param)
            pos += 2
            continue
        if not is_variable_name(tok):
            raise InvalidToken(f"unexpected token {tok!r}", pos)
        node: Term = Var(tok)
        pos += 1
        # Fold the finished subterm into its parents.
        while stack:
            top = stack[-1]
            if top.__class__ is list:
                if top[0] is None:  # function slot filled, argument next
                    top[0] = node
                    break
                stack.pop()
                node = App(top[0], node)
            else:
                stack.pop()
                node = Abs(top, node)
        else:
            if pos != n:
                raise TrailingTokens("input continues past a complete term", pos)
            return node


def parse_debruijn(text: str) -> DbTerm:
    """Parse de Bruijn prefix syntax: term := nat | "L" term | "@" term term.

    Validates the scope invariant: a nonzero index never exceeds the
    number of enclosing abstractions.
    """
    tokens = text.split()
    stack: list = []
    depth = 0  # enclosing abstractions at the read position
    pos = 0
    n = len(tokens)
    while True:
        if pos >= n:
            raise TruncatedTerm("term ends mid-production", pos)
        tok = tokens[pos]
        if tok == APP_TOKEN:
            stack.append([None])
            pos += 1
            continue
        if tok == ABS_TOKEN:
            stack.append(ABS_TOKEN)
            depth += 1
            pos += 1
            continue
        if not _NAT_RE.match(tok):
            raise InvalidToken(f"unexpected token {tok!r}", pos)
        index = int(tok)
        if index > depth:
            raise IndexOutOfScope(
                f"index {index} under only {depth} binders", pos
            )
        node: DbTerm = DbVar(index)
        pos += 1
        while stack:
            top = stack[-1]
            if top.__class__ is list:
                if top[0] is None:
                    top[0] = node
                    break
                stack.pop()
                node = DbApp(top[0], node)
            else:
                stack.pop()
                depth -= 1
                node = DbAbs(node)
        else:
            if pos != n:
                raise TrailingTokens("input continues past a complete term", pos)
            return node


def print_term(t: Term) -> str:
    """Pre-order serialization of a named term; inverse of parse_traditional."""
    out: list[str] = []
    stack: list[Term] = [t]
    while stack:
        node = stack.pop()
        cls = node.__class__
        if cls is Var:
            out.append(node.name)
        elif cls is Abs:
            out.append(ABS_TOKEN)
            out.append(node.param)
            stack.append(node.body)
        else:
            out.append(APP_TOKEN)
            stack.append(node.arg)
            stack.append(node.fun)
    return " ".join(out)


def print_db(t: DbTerm) -> str:
    """Pre-order serialization of a de Bruijn term; inverse of parse_debruijn."""
    out: list[str] = []
    stack: list[DbTerm] = [t]
    while stack:
        node = stack.pop()
        cls = node.__class__
        if cls is DbVar:
            out.append(str(node.index))
        elif cls is DbAbs:
            out.append(ABS_TOKEN)
            stack.append(node.body)
        else:
            out.append(APP_TOKEN)
            stack.append(node.arg)
            stack.append(node.fun)
    return " ".join(out)


def token_count(t: Term | DbTerm) -> int:
    """Length of the prefix token sequence of ``t``."""
    count = 0
    stack = [t]
    while stack:
        node = stack.pop()
        cls = node.__class__
        if cls is Var or cls is DbVar:
            count += 1
        elif cls is Abs:
            count += 2
            stack.append(node.body)
        elif cls is DbAbs:
            count += 1
            stack.append(node.body)
        else:
            count += 1
            stack.append(node.arg)
            stack.append(node.fun)
    return count


def free_variables(t: Term) -> set[str]:
    """Free variable names: FV(x)={x}, FV(Lx.M)=FV(M)-{x}, FV(M N)=FV(M)|FV(N)."""
    free: set[str] = set()
    stack: list[tuple[Term, frozenset[str]]] = [(t, frozenset())]
    while stack:
        node, bound = stack.pop()
        cls = node.__class__
        if cls is Var:
            if node.name not in bound:
                free.add(node.name)
        elif cls is Abs:
            stack.append((node.body, bound | {node.param}))
        else:
            stack.append((node.fun, bound))
            stack.append((node.arg, bound))
    return free
