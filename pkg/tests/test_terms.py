import pytest

from lambda_forge.terms import (
    Abs,
    App,
    DbAbs,
    DbApp,
    DbVar,
    IndexOutOfScope,
    InvalidToken,
    MalformedBinder,
    TrailingTokens,
    TruncatedTerm,
    Var,
    free_variables,
    is_variable_name,
    parse_debruijn,
    parse_traditional,
    print_db,
    print_term,
    token_count,
)

OMEGA = "@ L x @ x x L x @ x x"


def test_parse_identity_function():
    assert parse_traditional("L x x") == Abs("x", Var("x"))


def test_parse_identity_applied_to_free_var():
    assert parse_traditional("@ L x x y") == App(Abs("x", Var("x")), Var("y"))


def test_parse_omega():
    half = Abs("x", App(Var("x"), Var("x")))
    assert parse_traditional(OMEGA) == App(half, half)


def test_parse_errors():
    with pytest.raises(TruncatedTerm):
        parse_traditional("@ L x")
    with pytest.raises(TrailingTokens):
        parse_traditional("x y")
    with pytest.raises(InvalidToken):
        parse_traditional("@ x X1")
    with pytest.raises(MalformedBinder):
        parse_traditional("L @ x x")
    with pytest.raises(MalformedBinder):
        parse_traditional("L")
    with pytest.raises(TruncatedTerm):
        parse_traditional("")


def test_parse_error_positions():
    with pytest.raises(TrailingTokens) as exc:
        parse_traditional("x y")
    assert exc.value.position == 1
    with pytest.raises(InvalidToken) as exc:
        parse_traditional("@ x ?")
    assert exc.value.position == 2


def test_parse_debruijn_church_booleans():
    assert parse_debruijn("L L 2") == DbAbs(DbAbs(DbVar(2)))
    assert parse_debruijn("L L 1") == DbAbs(DbAbs(DbVar(1)))


def test_parse_debruijn_scope_validation():
    with pytest.raises(IndexOutOfScope):
        parse_debruijn("L 3")
    with pytest.raises(IndexOutOfScope):
        parse_debruijn("@ L 1 2")
    # zero is always legal: it marks a free variable
    assert parse_debruijn("0") == DbVar(0)
    assert parse_debruijn("L @ 1 0") == DbAbs(DbApp(DbVar(1), DbVar(0)))


def test_parse_debruijn_rejects_noncanonical_numbers():
    with pytest.raises(InvalidToken):
        parse_debruijn("L 01")
    with pytest.raises(InvalidToken):
        parse_debruijn("L -1")


def test_print_examples():
    assert print_term(Abs("x", Var("x"))) == "L x x"
    assert print_db(DbAbs(DbAbs(DbVar(2)))) == "L L 2"
    assert print_term(App(Var("a"), Var("b"))) == "@ a b"


def test_print_parse_inverse_on_samples():
    for text in ("L x x", "@ L x x y", OMEGA, "@ @ a b L c @ c c"):
        assert print_term(parse_traditional(text)) == text
    for text in ("L L 2", "@ 0 0", "L @ 1 @ 0 1"):
        assert print_db(parse_debruijn(text)) == text


def test_token_count():
    assert token_count(parse_traditional("L x x")) == 3
    assert token_count(parse_traditional("@ L x x y")) == 5
    assert token_count(parse_traditional("L a L b a")) == 5  # named Church true
    assert token_count(parse_debruijn("L L 2")) == 3


def test_free_variables():
    assert free_variables(parse_traditional("L x x")) == set()
    assert free_variables(parse_traditional("@ L x x y")) == {"y"}
    assert free_variables(parse_traditional("L x @ x y")) == {"y"}
    assert free_variables(parse_traditional("@ z L z z")) == {"z"}


def test_variable_name_lexicon():
    for good in ("a", "z", "a1", "foo", "ab12"):
        assert is_variable_name(good)
    for bad in ("L", "@", "A", "1a", "", "x_y", "x-1"):
        assert not is_variable_name(bad)
