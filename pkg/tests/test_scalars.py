from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given, strategies as st

from homdef.scalars import (ExpressionError, ParameterContext, Scalar, ScalarError,
                            SingularSpecialization, parse_expression, substitute, truncate_in_t)
from oracle import to_sympy

CTX = ParameterContext(("a", "b", "t"), "t")
a, b, t = sp.symbols("a b t")


# random expressions as text, rendered identically for homdef and sympy
def _leaf():
    return st.one_of(st.sampled_from(["a", "b", "t"]), st.integers(0, 9).map(str))


@st.composite
def expressions(draw, depth=3):
    if depth == 0 or draw(st.booleans()):
        return draw(_leaf())
    op = draw(st.sampled_from(["+", "-", "*", "/", "^", "neg"]))
    x = draw(expressions(depth=depth - 1))
    if op == "neg":
        return "-(%s)" % x
    if op == "^":
        return "(%s)^%d" % (x, draw(st.integers(0, 3)))
    y = draw(expressions(depth=depth - 1))
    return "(%s) %s (%s)" % (x, op, y)


def both(text):
    try:
        mine = parse_expression(text, CTX)
    except (ExpressionError, ZeroDivisionError):
        mine = None
    theirs = sp.sympify(text.replace("^", "**"), locals={"a": a, "b": b, "t": t})
    return mine, theirs


@given(expressions())
def test_parser_agrees_with_sympy(text):
    mine, theirs = both(text)
    if mine is None:
        # only division by something that is identically zero may be refused
        assert theirs.has(sp.zoo) or theirs is sp.nan or "/" in text
        return
    assert sp.simplify(to_sympy(mine) - theirs) == 0


def scalars():
    return expressions().map(lambda s: both(s)[0]).filter(lambda x: x is not None)


@given(scalars(), scalars(), scalars())
def test_field_axioms(x, y, z):
    assert x + y == y + x
    assert x * y == y * x
    assert (x + y) + z == x + (y + z)
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x - x == 0
    assert x + 0 == x and x * 1 == x
    if x:
        assert x / x == 1
        assert (y / x) * x == y


@given(scalars(), scalars())
def test_arithmetic_matches_sympy(x, y):
    X, Y = to_sympy(x), to_sympy(y)
    assert sp.simplify(to_sympy(x * y) - X * Y) == 0
    assert sp.simplify(to_sympy(x - y) - (X - Y)) == 0


def test_precedence():
    p = lambda s: parse_expression(s, CTX)
    assert p("-a^2") == -(p("a") ** 2)
    assert p("2/3^2") == Fraction(2, 9)
    assert p("2*-a") == -2 * p("a")
    assert p("a - b - t") == p("a") - p("b") - p("t")
    assert p("12/4/3") == 1


@pytest.mark.parametrize("text, col", [("a + * b", 5), ("a + q", 5), ("(a + b", 7), ("a / 0", 5),
                                       ("a ^ b", 5), ("", 1)])
def test_parse_errors_carry_column(text, col):
    with pytest.raises(ExpressionError) as e:
        parse_expression(text, CTX)
    assert e.value.col == col


def test_substitute_and_singular():
    x = parse_expression("(a + b*t)/(a - 1)", CTX)
    y = substitute(x, {"a": 3})
    assert y.ctx.symbols == ("b", "t")
    assert y == parse_expression("(3 + b*t)/2", y.ctx)
    with pytest.raises(SingularSpecialization):
        substitute(x, {"a": 1})
    with pytest.raises(ScalarError):
        substitute(x, {"q": 1})


def test_truncate_and_coefficients():
    x = parse_expression("(1 + t)^4 * a", CTX)
    assert truncate_in_t(x, 1) == parse_expression("a + 4*a*t", CTX)
    assert x.coefficient("t", 2) == 6 * parse_expression("a", CTX)
    assert x.degree_in("t") == 4
    with pytest.raises(ScalarError):
        truncate_in_t(parse_expression("1/(1 - t)", CTX), 2)


def test_denominator_factors():
    assert parse_expression("b/(a^2*t)", CTX).denominator_factors() == ["a", "t"]
    assert parse_expression("1/(a + b)", CTX).denominator_factors() == ["a + b"]
    assert parse_expression("a/7", CTX).denominator_factors() == []


def test_contexts():
    other = ParameterContext(("a", "c"))
    u = CTX.union(other)
    assert u.symbols == ("a", "b", "t", "c") and u.deformation_symbol == "t"
    x = parse_expression("a", CTX)
    assert x.lift(u) == parse_expression("a", u)
    with pytest.raises(ScalarError):
        x + parse_expression("a", other)
    with pytest.raises(ValueError):
        ParameterContext(("a", "a"))
    with pytest.raises(ZeroDivisionError):
        x / Scalar.zero(CTX)
