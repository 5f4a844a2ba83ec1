import pytest
from hypothesis import given, strategies as st

from conftest import registry_round_trip_failures
from envalg.dsl import BinOp, DslError, Name, Neg, Num, Pow, parse, to_text
from envalg.envs import get_env


def test_registry_round_trip():
    assert registry_round_trip_failures() == []


def leaves():
    return st.one_of(st.integers(min_value=0, max_value=50).map(Num),
                     st.sampled_from(["X1", "T12", "a1", "i", "X'3"]).map(Name))


def trees():
    return st.recursive(leaves(), lambda sub: st.one_of(
        st.builds(BinOp, st.sampled_from("+-*/"), sub, sub),
        st.builds(Neg, sub),
        st.builds(Pow, sub, st.integers(min_value=0, max_value=4))), max_leaves=12)


@given(trees())
def test_printer_is_inverse_of_parser(node):
    assert parse(to_text(node)) == node


def test_precedence():
    assert parse("a1 - X1*X2^2") == BinOp("-", Name("a1"), BinOp("*", Name("X1"), Pow(Name("X2"), 2)))
    assert parse("-X1^2") == Neg(Pow(Name("X1"), 2))
    assert parse("X1 - (X2 - X3)") != parse("X1 - X2 - X3")
    assert to_text(parse("(X1 + X2)*X3")) == "(X1 + X2)*X3"


@pytest.mark.parametrize("text, line, col, fragment", [
    ("X1 +", 1, 5, "expected an operand"),
    ("comm(X1)", 1, 1, "takes 2 argument"),
    ("frob(X1, X2)", 1, 1, "unknown function"),
    ("X1 $ X2", 1, 4, "unexpected character"),
    ("(X1 + X2", 1, 9, "expected ')'"),
    ("X1^X2", 1, 4, "integer literal"),
    ("X1\n  + * X2", 2, 5, "expected an operand"),
    ("comm", 1, 1, "needs arguments"),
])
def test_parse_errors(text, line, col, fragment):
    with pytest.raises(DslError) as info:
        parse(text)
    assert (info.value.line, info.value.col) == (line, col)
    assert fragment in str(info.value)


def test_unknown_names():
    env = get_env("standard")
    with pytest.raises(DslError, match="unknown generator 'X9'"):
        parse("X1 + X9", known=env.known)
    with pytest.raises(DslError, match="unknown identifier 'T7'"):
        parse("T7", known=env.known)


def test_engine_notes_and_aliases():
    c = get_env("contracted")
    eng = c.engine()
    assert eng.run(parse("X3")) == eng.run(parse("X'3"))
    q = get_env("classical")
    assert q.engine().run(parse("s1")) == q["x1"]
