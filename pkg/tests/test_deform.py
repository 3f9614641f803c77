import itertools as it

import pytest
import sympy as sp
from hypothesis import given, strategies as st

import oracle as O
import randalg as R
from homdef import (AlgebraError, FormalAutomorphism, FormalDeformation, LinearMap, TwistError,
                    algebra_to_deformation, apply_equivalence, check_deformation_equation,
                    check_identity, composition_deformation, deformation_to_algebra, delta1,
                    derived_algebra, untwist, yau_twist)
from homdef.catalog import load_algebra, load_map
from homdef.scalars import EMPTY, ParameterContext, coerce

seeds = st.integers(0, 10 ** 6)


def mu41_curve(**a):
    """Endomorphisms of mu41 polynomial in t (a2 = a3 = a4 = a5 = a7 = 0 kills every t(t-1) residual)."""
    bind = {"a2": 0, "a3": 0, "a4": 0, "a5": 0, "a7": 0}
    bind.update(a)
    return load_map("catalog:endo_mu41", bind)


def sym(A):
    return [[O.vec_sympy(A.mu.c[i][j]) for j in range(A.dim)] for i in range(A.dim)]


def test_twist_refuses_non_endomorphism():
    A = load_algebra("catalog:mu41")
    f = load_map("catalog:endo_mu41")
    with pytest.raises(TwistError) as e:
        yau_twist(A, f)
    assert not e.value.report.passed
    B = yau_twist(A, f.map(lambda x: x.substitute({"t": 1})))
    assert check_identity(B, "alternative").passed


def test_twist_of_twisted_needs_force():
    rng = R.rng_for(1)
    A = R.hom_alternative(rng)
    with pytest.raises(TwistError):
        yau_twist(A, A.alpha)
    B = yau_twist(A, A.alpha, force=True)
    assert B.alpha == A.alpha @ A.alpha
    assert check_identity(B, "alternative").passed


def test_untwist_round_trip():
    A = load_algebra("catalog:mu41")
    f = mu41_curve(a1=1, a6=2).map(lambda x: x.substitute({"t": 1}))
    B = yau_twist(A, f)
    back, rep = untwist(B)
    assert rep.passed and back.mu == A.mu and back.alpha.is_identity()
    with pytest.raises(TwistError):
        untwist(load_algebra("catalog:ex_1_5"))


@given(seeds, st.integers(0, 3), st.sampled_from([1, 2]))
def test_derived_closure_alternative(seed, n, kind):
    A = R.small_hom_alternative(R.rng_for(seed)) if seed % 3 else R.hom_alternative(R.rng_for(seed))
    D = derived_algebra(A, n, kind)
    k = n if kind == 1 else 2 ** n - 1
    assert D.mu == A.mu.compose(A.alpha ** k)
    assert D.alpha == A.alpha ** (k + 1)
    for w in ("left_alt", "right_alt", "multiplicative"):
        assert check_identity(D, w).passed


@given(seeds, st.integers(1, 2))
def test_derived_closure_malcev(seed, n):
    L = R.hom_lie(R.rng_for(seed))
    for kind in (1, 2):
        D = derived_algebra(L, n, kind)
        assert check_identity(D, "hom_lie").passed
        assert check_identity(D, "hom_malcev").passed


def test_derived_requires_multiplicative():
    A = R.random_algebra(R.rng_for(7), 3)
    assert not check_identity(A, "multiplicative").passed
    for n in (0, 1):
        with pytest.raises(TwistError):
            derived_algebra(A, n)
    B = R.small_hom_alternative(R.rng_for(7))
    assert derived_algebra(B, 0).mu == B.mu


def test_malcev_composition_against_oracle():
    A = load_algebra("catalog:malcev_plain_4dim")
    at = load_map("catalog:malcev_alpha_t")
    D = composition_deformation(A, at)
    assert D.flavor == "malcev" and D.degrees() == [1, 2]
    B = deformation_to_algebra(D)
    c = O.malcev_plain()
    al, t = O.malcev_alpha_t()
    assert sym(B) == [[al(c[i][j]) for j in range(4)] for i in range(4)]
    rep = check_deformation_equation(D, up_to=6)
    assert rep.passed and rep.notes == ["degree %d: ok" % d for d in range(7)]
    # type 2, n = 1: (alpha_t o [,]_t, alpha_t^2)
    D2 = derived_algebra(B, 1, 2)
    assert sym(D2) == [[al(al(c[i][j])) for j in range(4)] for i in range(4)]
    assert [O.vec_sympy(D2.alpha.image(j)) for j in range(4)] == [al(al(O.E(j, 4))) for j in range(4)]


def test_alternative_composition():
    A = load_algebra("catalog:mu41")
    D = composition_deformation(A, mu41_curve())
    assert D.flavor == "alternative"
    assert check_deformation_equation(D, up_to=4).passed
    # the published family with a2 a5 != a3 a6 is not an endomorphism for generic t
    with pytest.raises(TwistError):
        composition_deformation(A, load_map("catalog:endo_mu41"))


def test_deformation_equation_reports_failing_degree():
    A = load_algebra("catalog:mu41")
    bad = R.random_table(R.rng_for(11), 4, density=0.6).map(lambda x: coerce(x, EMPTY))
    D = FormalDeformation(A, {2: bad}, {}, "alternative")
    rep = check_deformation_equation(D, up_to=2)
    assert "degree 0: ok" in rep.notes and "degree 1: ok" in rep.notes
    assert "degree 2: FAIL" in rep.notes
    assert all(w.where[-1] == "t^2" for w in rep.witnesses)


def test_formal_deformation_validation():
    A = load_algebra("catalog:malcev_plain_4dim")
    m = R.random_table(R.rng_for(2), 4, density=0.9).map(lambda x: coerce(x, EMPTY))
    with pytest.raises(AlgebraError):
        FormalDeformation(A, {1: m}, {}, "malcev")
    with pytest.raises(AlgebraError):
        FormalDeformation(A, {0: A.mu}, {}, "malcev")
    with pytest.raises(AlgebraError):
        FormalDeformation(A, {}, {}, "jordan")


def test_algebra_deformation_round_trip():
    B = load_algebra("catalog:malcev_t")
    D = algebra_to_deformation(B)
    assert D.flavor == "malcev" and D.degrees() == [1, 2]
    C = deformation_to_algebra(D)
    assert C.mu == B.mu and C.alpha == B.alpha


@given(seeds, st.integers(1, 3))
def test_equivalence_first_order(seed, order):
    """mu'_1 = mu_1 - delta1(rho_1), alpha'_1 = alpha_1 + rho_1 alpha_0 - alpha_0 rho_1."""
    rng = R.rng_for(seed)
    A = R.small_hom_alternative(rng)
    one = lambda m: LinearMap(m).map(lambda x: coerce(x, EMPTY))
    m1 = R.random_table(rng, 3).map(lambda x: coerce(x, EMPTY))
    a1 = one(R.rational_matrix(rng, 3, -1, 1))
    D = FormalDeformation(A, {1: m1}, {1: a1}, "alternative")
    rho1 = one(R.rational_matrix(rng, 3))
    rho = FormalAutomorphism({1: rho1, 2: one(R.rational_matrix(rng, 3))}, 3)
    E = apply_equivalence(D, rho, order)
    ctx = E.ctx
    r = rho1.lift(ctx)
    assert E.mu(1) == D.mu(1) - delta1(A, rho1).lift(ctx)
    assert E.alpha(1) == D.alpha(1) + r @ D.alpha(0) - D.alpha(0) @ r
    assert E.mu(0) == D.mu(0) and E.alpha(0) == D.alpha(0)


def test_equivalence_preserves_solutions():
    A = load_algebra("catalog:mu41")
    D = composition_deformation(A, mu41_curve(a1=1, a6=-1))
    ctx = D.ctx
    rho = FormalAutomorphism.from_map(
        LinearMap.from_images([[coerce(x, ctx) for x in v] for v in
                               [[1, "t", 0, 0], [0, 1, 0, 0], [0, "t^2", 1, "t"], [0, 0, 0, 1]]]))
    E = apply_equivalence(D, rho, 3)
    assert check_deformation_equation(E, up_to=3).passed
    with pytest.raises(ValueError):
        apply_equivalence(D, rho, None)
