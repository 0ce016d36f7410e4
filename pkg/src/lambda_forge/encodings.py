"""Church encodings of booleans, boolean operators, and numerals.

Operator encodings are the standard Church forms:

    not = Lp.La.Lb. p b a      and = Lp.Lq. p q p      or = Lp.Lq. p p q

true/false are La.Lb.a / La.Lb.b (de Bruijn ``L L 2`` / ``L L 1``) and
the numeral n is Lf.Lx.f^n x.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .debruijn import from_debruijn, name_supply, to_debruijn
from .terms import Abs, App, DbAbs, DbApp, DbVar, Term, Var


@dataclass(frozen=True)
class ConstTrue:
    pass


@dataclass(frozen=True)
class ConstFalse:
    pass


@dataclass(frozen=True)
class FreeVar:
    name: str


@dataclass(frozen=True)
class Not:
    expr: "BoolExpr"


@dataclass(frozen=True)
class And:
    left: "BoolExpr"
    right: "BoolExpr"


@dataclass(frozen=True)
class Or:
    left: "BoolExpr"
    right: "BoolExpr"


BoolExpr = Union[ConstTrue, ConstFalse, FreeVar, Not, And, Or]

TRUE = ConstTrue()
FALSE = ConstFalse()


class UnboundVariable(LookupError):
    pass


def internal_nodes(e: BoolExpr) -> int:
    """Count of Not/And/Or nodes."""
    match e:
        case Not(x):
            return 1 + internal_nodes(x)
        case And(l, r) | Or(l, r):
            return 1 + internal_nodes(l) + internal_nodes(r)
        case _:
            return 0


def expr_free_vars(e: BoolExpr) -> set[str]:
    match e:
        case FreeVar(name):
            return {name}
        case Not(x):
            return expr_free_vars(x)
        case And(l, r) | Or(l, r):
            return expr_free_vars(l) | expr_free_vars(r)
        case _:
            return set()


def eval_bool_expr(e: BoolExpr, env: dict[str, bool] | None = None) -> bool:
    """Truth-table semantics; the independent oracle for the encodings."""
    env = env or {}
    match e:
        case ConstTrue():
            return True
        case ConstFalse():
            return False
        case FreeVar(name):
            if name not in env:
                raise UnboundVariable(name)
            return env[name]
        case Not(x):
            return not eval_bool_expr(x, env)
        case And(l, r):
            return eval_bool_expr(l, env) and eval_bool_expr(r, env)
        case Or(l, r):
            return eval_bool_expr(l, env) or eval_bool_expr(r, env)
    raise TypeError(f"not a BoolExpr: {e!r}")


def church_bool(value: bool) -> Term:
    """true -> La.Lb.a, false -> La.Lb.b."""
    return Abs("a", Abs("b", Var("a" if value else "b")))


def church_numeral(n: int) -> Term:
    """The numeral Lf.Lx. f applied n times to x (binders named a, b)."""
    if n < 0:
        raise ValueError("Church numerals encode naturals")
    body: Term = Var("b")
    for _ in range(n):
        body = App(Var("a"), body)
    return Abs("a", Abs("b", body))


_MULT_DB = DbAbs(DbAbs(DbAbs(DbApp(DbVar(3), DbApp(DbVar(2), DbVar(1))))))


def church_mult(a: Term, b: Term) -> Term:
    """(Lm.Ln.Lf. m (n f)) a b, freshly named; a and b must be closed."""
    product = DbApp(DbApp(_MULT_DB, to_debruijn(a)), to_debruijn(b))
    return from_debruijn(product)


def encode_bool_expr(e: BoolExpr) -> Term:
    """Compile a boolean expression to a lambda term.

    Constants and operators take the Church forms above; a FreeVar stays
    a free variable.  Binder names are drawn from the name supply,
    skipping the expression's free variables, so the whole term
    satisfies the Barendregt convention.
    """
    taken = expr_free_vars(e)
    supply = (n for n in name_supply() if n not in taken)

    def fresh() -> str:
        return next(supply)

    def enc(e: BoolExpr) -> Term:
        match e:
            case ConstTrue():
                a, b = fresh(), fresh()
                return Abs(a, Abs(b, Var(a)))
            case ConstFalse():
                a, b = fresh(), fresh()
                return Abs(a, Abs(b, Var(b)))
            case FreeVar(name):
                return Var(name)
            case Not(x):
                p, a, b = fresh(), fresh(), fresh()
                combinator = Abs(p, Abs(a, Abs(b, App(App(Var(p), Var(b)), Var(a)))))
                return App(combinator, enc(x))
            case And(l, r):
                p, q = fresh(), fresh()
                combinator = Abs(p, Abs(q, App(App(Var(p), Var(q)), Var(p))))
                return App(App(combinator, enc(l)), enc(r))
            case Or(l, r):
                p, q = fresh(), fresh()
                combinator = Abs(p, Abs(q, App(App(Var(p), Var(p)), Var(q))))
                return App(App(combinator, enc(l)), enc(r))
        raise TypeError(f"not a BoolExpr: {e!r}")

    return enc(e)
