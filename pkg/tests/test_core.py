import itertools as it

import pytest
import sympy as sp
from hypothesis import given, strategies as st

import oracle as O
import randalg as R
from homdef import (AlgebraError, CheckReport, HomAlgebra, LinearMap, check_identity, check_morphism,
                    commutator_algebra, opposite_algebra)
from homdef.catalog import load_algebra

seeds = st.integers(0, 10 ** 6)


def sym_table(A):
    return [[O.vec_sympy(A.mu.c[i][j]) for j in range(A.dim)] for i in range(A.dim)]


def sym_alpha(A):
    return O.lmap([O.vec_sympy(A.alpha.image(j)) for j in range(A.dim)])


def generic_left_alt(A):
    """as(x, x, y) with x, y generic: the unlinearized identity, in sympy."""
    n = A.dim
    X = list(sp.symbols("x0:%d" % n))
    Y = list(sp.symbols("y0:%d" % n))
    c, al = sym_table(A), sym_alpha(A)
    return any(O.associator(c, al, X, X, Y))


def test_mu4_alternative_not_associative_oracle():
    for name, c in (("mu41", O.mu41()), ("mu42", O.mu42())):
        A = load_algebra("catalog:" + name)
        assert sym_table(A) == c
        I = O.lmap(O.identity_cols(4))
        bad = [(i, j, k) for i, j, k in it.product(range(4), repeat=3)
               if any(O.associator(c, I, O.E(i, 4), O.E(j, 4), O.E(k, 4)))]
        rep = check_identity(A, "hom_assoc", max_witnesses=None)
        assert rep.violations == len(bad) > 0
        assert [w.where for w in rep.witnesses] == [tuple("e%d" % m for m in b) for b in bad]
        assert check_identity(A, "alternative").passed


def test_opposites():
    A = load_algebra("catalog:mu41")
    op = opposite_algebra(A)
    assert check_identity(op, "alternative").passed
    assert opposite_algebra(op).mu == A.mu
    # mu42 is isomorphic to the opposite of mu41 via e2 <-> e3
    B = load_algebra("catalog:mu42")
    one, zero = A.one(), A.zero()
    swap = LinearMap([[one if (i, j) in {(0, 0), (1, 1), (2, 3), (3, 2)} else zero for j in range(4)]
                      for i in range(4)])
    assert check_morphism(op, B, swap).passed
    assert not check_morphism(A, B, swap).passed


def test_commutator_is_skew():
    C = commutator_algebra(load_algebra("catalog:octonions"))
    assert check_identity(C, "skewsymmetric").passed
    assert C.flavor_hint == "malcev"
    assert not check_identity(C, "hom_lie").passed
    assert check_identity(C, "hom_malcev").passed


@given(seeds)
def test_linearized_left_identity_matches_direct(seed):
    rng = R.rng_for(seed)
    A = R.small_hom_alternative(rng) if rng.random() < 0.4 else R.random_algebra(rng)
    assert check_identity(A, "left_alt").passed == (not generic_left_alt(A))


@given(seeds)
def test_malcev_check_matches_oracle(seed):
    rng = R.rng_for(seed)
    A = R.hom_lie(rng) if rng.random() < 0.5 else R.random_algebra(rng, skew=True)
    res = O.malcev_identity(sym_table(A), sym_alpha(A))
    assert check_identity(A, "hom_malcev").passed == (not any(res))


@given(seeds)
def test_conjugation_is_an_isomorphism(seed):
    rng = R.rng_for(seed)
    A = R.random_algebra(rng)
    g = R.invertible(rng, A.dim)
    B = R.conjugate(A, g)
    from homdef.scalars import EMPTY, coerce
    G = LinearMap(g).map(lambda x: coerce(x, EMPTY))
    assert check_morphism(A, B, G).passed
    for w in ("left_alt", "right_alt", "hom_assoc", "multiplicative"):
        assert check_identity(A, w).passed == check_identity(B, w).passed


def test_alternating_associator_equivalent_on_plain():
    for name in ("mu41", "mu42", "octonions"):
        assert check_identity(load_algebra("catalog:" + name), "alternating_associator").passed
    A = load_algebra("catalog:ex_1_4")
    plain = A.replace(alpha=LinearMap.identity(3, A.one()))
    assert not check_identity(plain, "alternating_associator").passed


def test_report_round_trip():
    rep = check_identity(load_algebra("catalog:mu41"), "hom_assoc")
    d = rep.to_dict()
    back = CheckReport.from_dict(d)
    assert back.to_dict() == d
    assert d["verdict"] == "fail" and d["violations"] == rep.violations
    assert rep.summary().startswith("hom_assoc: FAIL")


def test_witness_cap():
    A = R.random_algebra(R.rng_for(3), 3)
    full = check_identity(A, "hom_assoc", max_witnesses=None)
    capped = check_identity(A, "hom_assoc", max_witnesses=2)
    assert capped.violations == full.violations
    assert len(capped.witnesses) == min(2, full.violations)


def test_construction_errors():
    with pytest.raises(AlgebraError):
        HomAlgebra.build(2, {(0, 1): [1, 0]}, [[1, 0, 0], [0, 1, 0], [0, 0, 1]])
    with pytest.raises(AlgebraError):
        HomAlgebra.build(2, {(0, 1): [1, 0]}, flavor_hint="malcev")
    with pytest.raises(AlgebraError):
        check_identity(load_algebra("catalog:mu41"), "jordan")


def test_parametric_check_is_identically_in_parameters():
    A = load_algebra("catalog:ex_1_4")
    assert check_identity(A, "hom_assoc").passed
    plain = A.replace(alpha=LinearMap.identity(3, A.one()))
    assert not check_identity(plain, "hom_assoc").passed
    assert not check_identity(plain, "left_alt").passed
    assert check_identity(plain.substitute({"a": 1, "b": 1}), "hom_assoc").passed
