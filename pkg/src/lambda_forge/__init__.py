"""Lambda calculus engine and reduction-dataset toolchain."""

from .terms import (
    Abs,
    App,
    DbAbs,
    DbApp,
    DbTerm,
    DbVar,
    IndexOutOfScope,
    InvalidToken,
    MalformedBinder,
    ParseError,
    Term,
    TrailingTokens,
    TruncatedTerm,
    Var,
    free_variables,
    parse_debruijn,
    parse_traditional,
    print_db,
    print_term,
    token_count,
)
from .reduction import (
    DEFAULT_MAX_STEPS,
    NormalizeResult,
    Redex,
    ReductionOutcome,
    Strategy,
    beta_reduce_once,
    find_redex,
    is_normal_form,
    normalize,
    substitute,
)
from .debruijn import (
    NameSupplyExhausted,
    alpha_equal,
    alphabetical_names,
    binder_count,
    from_debruijn,
    name_supply,
    rename_term,
    shuffled_names,
    to_debruijn,
)
from .encodings import (
    FALSE,
    TRUE,
    And,
    BoolExpr,
    ConstFalse,
    ConstTrue,
    FreeVar,
    Not,
    Or,
    UnboundVariable,
    church_bool,
    church_mult,
    church_numeral,
    encode_bool_expr,
    eval_bool_expr,
    internal_nodes,
)

__version__ = "0.1.0"
