import pytest
from hypothesis import given, strategies as st

import randalg as R
from homdef import format_spec, parse_spec
from homdef.catalog import CATALOG, load_algebra
from homdef.specfile import SpecError


def test_basic_parse():
    s = parse_spec("""\
# a comment
name: demo
basis: u v
params: a
mu(u, u) = a*u + v   # trailing comment
alpha(v) = 2*v
""")
    A = s.algebra()
    assert A.name == "demo" and A.basis_labels == ("u", "v")
    assert A.format_vector(A.mu.c[0][0]) == "a*u + v"
    assert A.alpha.image(0) == (1, 0)
    assert A.alpha.image(1) == (0, 2)


@pytest.mark.parametrize("text, line, col", [
    ("basis: e0 e1\nmu(e0, e2) = e0\n", 2, 8),
    ("basis: e0 e1\nmu(e0, e1) = e0 +* e1\n", 2, 18),
    ("basis: e0 e1\nmu(e0, e1) = e0*e1\n", 2, 14),
    ("basis: e0 e1\nmu(e0, e1) = e0/e1\n", 2, 14),
    ("basis: e0 e1\nmu(e0, e1) = e0\nmu(e0, e1) = e1\n", 3, 1),
    ("basis: e0 e1\nfoo: 1\n", 2, 1),
    ("basis: e0 e1\nbracket(e0, e1) = e0\nflavor: malcev\nskew_complete: true\nbracket(e1, e0) = e0\n", 5, 1),
    ("basis: e0 e1\nparams: e0\n", 2, 8),
    ("basis: e0 e1\nnonsense\n", 2, 1),
])
def test_errors_carry_position(text, line, col):
    with pytest.raises(SpecError) as e:
        parse_spec(text, "x.hom")
    assert (e.value.line, e.value.col) == (line, col)
    assert str(e.value).startswith("x.hom:line %d, column %d" % (line, col))


def test_missing_basis():
    with pytest.raises(SpecError):
        parse_spec("mu(e0, e0) = e0\n")


def test_skew_completion():
    s = parse_spec("basis: x y z\nskew_complete: true\nbracket(x, y) = z\nbracket(y, x) = -z\n")
    t = s.table()
    assert t.is_skew() and t.c[1][0] == (0, 0, -1)
    with pytest.raises(SpecError):
        parse_spec("basis: x y\nskew_complete: true\nbracket(x, x) = y\n").table()


def test_two_maps_need_a_choice():
    s = parse_spec("basis: x y\nf(x) = y\ng = identity\n")
    with pytest.raises(SpecError):
        s.map()
    assert s.map(("f",)).image(0) == (0, 1)
    assert s.map(("g",)).is_identity()


@pytest.mark.parametrize("name", [n for n, e in CATALOG.items() if e.kind == "algebra"])
def test_catalog_round_trip(name):
    A = load_algebra("catalog:" + name)
    B = parse_spec(format_spec(A)).algebra()
    assert B.mu == A.mu and B.alpha == A.alpha
    assert B.basis_labels == A.basis_labels and B.ctx.symbols == A.ctx.symbols


@given(st.integers(0, 10 ** 6))
def test_random_round_trip(seed):
    A = R.random_algebra(R.rng_for(seed))
    B = parse_spec(format_spec(A)).algebra()
    assert B.mu == A.mu and B.alpha == A.alpha
