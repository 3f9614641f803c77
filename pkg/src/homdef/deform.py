"""
Twisting, derived Hom-algebras and formal deformations in one variable.

Deformations are exact polynomial families in the deformation symbol; only
`apply_equivalence` truncates, because the inverse of rho_t is a series.
"""

from dataclasses import dataclass, field
from itertools import product

from . import linalg
from .core import (AlgebraError, CheckReport, HomAlgebra, LinearMap, MAX_WITNESSES, MultiplicationTable,
                   _associator, _malcev_residual, check_endomorphism, check_identity, check_left_alt,
                   f_ctx, generic_vectors, monomial_key_str, split_generic, vadd, vsub)
from .scalars import Scalar, truncate_in_t


class TwistError(AlgebraError):
    def __init__(self, msg, report=None):
        AlgebraError.__init__(self, msg)
        self.report = report


def _unify(A, f):
    ctx = A.ctx.union(f_ctx(f))
    return A.lift(ctx), f.lift(ctx), ctx


def yau_twist(A, alpha, force=False, verify=True):
    """(A, alpha o mu, alpha) for an algebra endomorphism alpha of a plain algebra.

    `force` allows a non-identity twist on A (result twist alpha o alpha_A, no
    closure guarantee); `verify=False` skips the endomorphism test.
    """
    A, alpha, ctx = _unify(A, alpha)
    plain = A.alpha.is_identity()
    if not plain and not force:
        raise TwistError("twist of %s is not the identity; pass force=True to twist anyway" % (A.name or "A"))
    if verify:
        rep = check_endomorphism(A, alpha)
        if not rep.passed:
            raise TwistError("map is not an endomorphism of the multiplication", rep)
    twist = alpha if plain else alpha @ A.alpha
    return A.replace(mu=A.mu.compose(alpha), alpha=twist, name=(A.name + "_twisted") if A.name else "")


def untwist(A):
    """(A, alpha^-1 o mu, id), plus a report on whether alpha is an endomorphism of the result."""
    try:
        inv = linalg.inverse(linalg.Matrix(A.alpha.m))
    except linalg.LinalgError:
        raise TwistError("twist map is singular") from None
    ainv = LinearMap(inv.entries)
    B = A.replace(mu=A.mu.compose(ainv), alpha=LinearMap.identity(A.dim, A.one()),
                  name=(A.name + "_untwisted") if A.name else "")
    return B, check_endomorphism(B, A.alpha)


def derived_algebra(A, n, kind=1):
    """n-th derived Hom-algebra: type 1 (a^n o mu, a^(n+1)), type 2 (a^(2^n-1) o mu, a^(2^n))."""
    if kind not in (1, 2):
        raise ValueError("type must be 1 or 2")
    if n < 0:
        raise ValueError("n must be nonnegative")
    rep = check_identity(A, "multiplicative")
    if not rep.passed:
        raise TwistError("derived algebras need a multiplicative Hom-algebra", rep)
    if n == 0:
        return A
    p = n if kind == 1 else 2 ** n - 1
    a = A.alpha
    return A.replace(mu=A.mu.compose(a ** p), alpha=a ** (p + 1),
                     name=("%s^(%d,type%d)" % (A.name, n, kind)) if A.name else "")


# ---------------------------------------------------------------------------
# formal deformations

@dataclass
class FormalDeformation:
    base: HomAlgebra
    mu_terms: dict = field(default_factory=dict)
    alpha_terms: dict = field(default_factory=dict)
    flavor: str = "alternative"
    order: int = None
    symbol: str = "t"

    def __post_init__(self):
        ctx = self.base.ctx
        if self.symbol not in ctx.symbols:
            ctx = ctx.with_deformation(self.symbol)
        elif ctx.deformation_symbol != self.symbol:
            ctx = ctx.with_deformation(self.symbol)
        self.base = self.base.lift(ctx)
        self.mu_terms = {d: m.lift(ctx) for d, m in sorted(self.mu_terms.items())}
        self.alpha_terms = {d: a.lift(ctx) for d, a in sorted(self.alpha_terms.items())}
        for d in list(self.mu_terms) + list(self.alpha_terms):
            if not isinstance(d, int) or d < 1:
                raise AlgebraError("deformation degrees must be integers >= 1, got %r" % (d,))
        for m in self.mu_terms.values():
            if m.dim != self.base.dim:
                raise AlgebraError("term of wrong dimension")
        for a in self.alpha_terms.values():
            if a.dim != self.base.dim:
                raise AlgebraError("term of wrong dimension")
        if self.flavor not in ("alternative", "malcev"):
            raise AlgebraError("unknown flavor %r" % self.flavor)
        if self.flavor == "malcev":
            for d, m in self.mu_terms.items():
                if not m.is_skew():
                    raise AlgebraError("malcev deformation term of degree %d is not skewsymmetric" % d)
        if self.order is None:
            self.order = max(list(self.mu_terms) + list(self.alpha_terms) + [0])

    @property
    def ctx(self):
        return self.base.ctx

    @property
    def dim(self):
        return self.base.dim

    def mu(self, degree):
        if degree == 0:
            return self.base.mu
        return self.mu_terms.get(degree) or MultiplicationTable.zeros(self.dim, self.base.zero())

    def alpha(self, degree):
        if degree == 0:
            return self.base.alpha
        return self.alpha_terms.get(degree) or LinearMap([[self.base.zero()] * self.dim] * self.dim)

    def degrees(self):
        return sorted(set(self.mu_terms) | set(self.alpha_terms))

    def __str__(self):
        lines = ["base:", str(self.base)]
        for d in self.degrees():
            lines.append("degree %d:" % d)
            for name, obj in (("mu", self.mu_terms.get(d)), ("alpha", self.alpha_terms.get(d))):
                if obj is None:
                    continue
                if name == "mu":
                    for i, j in product(range(self.dim), repeat=2):
                        v = obj.c[i][j]
                        if any(v):
                            lines.append("  mu_%d(%s, %s) = %s" % (d, self.base.basis_labels[i],
                                                                 self.base.basis_labels[j],
                                                                 self.base.format_vector(v)))
                else:
                    for j in range(self.dim):
                        v = obj.image(j)
                        if any(v):
                            lines.append("  alpha_%d(%s) = %s" % (d, self.base.basis_labels[j],
                                                                self.base.format_vector(v)))
        return "\n".join(lines)


@dataclass
class FormalAutomorphism:
    """rho_t = id + sum_{i>=1} rho_i t^i."""
    terms: dict
    dim: int

    @classmethod
    def from_map(cls, rho_t, symbol="t"):
        parts = split_map(rho_t, symbol)
        rho0 = parts.pop(0, None)
        if rho0 is None or not rho0.is_identity():
            raise AlgebraError("degree-0 part of rho_t is not the identity")
        return cls(parts, rho_t.dim)


def _t_powers(ctx, symbol, n):
    t = Scalar.var(ctx, symbol)
    out = [Scalar.one(ctx)]
    for _ in range(n):
        out.append(out[-1] * t)
    return out


def split_map(f, symbol):
    """{degree: LinearMap} with f = sum f_d t^d (entries polynomial in t)."""
    degs = {}
    for x in f.flatten():
        for d in range(x.degree_in(symbol) + 1):
            degs[d] = True
    zero = f.m[0][0] - f.m[0][0]
    out = {}
    for d in sorted(degs):
        part = f.map(lambda x: x.coefficient(symbol, d))
        if d == 0 or not part.is_zero():
            out[d] = part
    if 0 not in out:
        out[0] = LinearMap([[zero] * f.dim] * f.dim)
    return out


def split_table(m, symbol):
    degs = set()
    for x in m.flatten():
        degs.update(range(x.degree_in(symbol) + 1))
    out = {}
    for d in sorted(degs):
        part = m.map(lambda x: x.coefficient(symbol, d))
        if d == 0 or not part.is_zero():
            out[d] = part
    return out


def deformation_to_algebra(D):
    """The single Hom-algebra (mu_t, alpha_t) over a context containing t."""
    ctx = D.ctx
    deg = max(D.degrees() + [0])
    tp = _t_powers(ctx, D.symbol, deg)
    mu = D.base.mu
    for d, m in D.mu_terms.items():
        mu = mu + m.scale(tp[d])
    alpha = D.base.alpha
    for d, a in D.alpha_terms.items():
        alpha = alpha + a.scale(tp[d])
    flavor = "malcev" if D.flavor == "malcev" else D.base.flavor_hint
    return D.base.replace(mu=mu, alpha=alpha, flavor_hint=flavor)


def algebra_to_deformation(A, symbol=None, flavor=None):
    """Split a Hom-algebra whose entries are polynomial in t into its t-degree parts."""
    symbol = symbol or A.ctx.deformation_symbol or "t"
    if symbol not in A.ctx.symbols:
        A = A.lift(A.ctx.with_deformation(symbol))
    mus = split_table(A.mu, symbol)
    alphas = split_map(A.alpha, symbol)
    base = A.replace(mu=mus.pop(0, MultiplicationTable.zeros(A.dim, A.zero())), alpha=alphas.pop(0))
    if flavor is None:
        flavor = "malcev" if A.flavor_hint == "malcev" else "alternative"
    if flavor == "malcev":
        base = base.replace(flavor_hint="malcev")
    return FormalDeformation(base, mus, alphas, flavor, None, symbol)


def composition_deformation(A, alpha_t, symbol=None):
    """mu_t = alpha_t o mu for an endomorphism alpha_t = id + sum t^i alpha_i of a plain algebra."""
    symbol = symbol or f_ctx(alpha_t).deformation_symbol or "t"
    A, alpha_t, ctx = _unify(A, alpha_t)
    if symbol not in ctx.symbols:
        raise AlgebraError("deformation symbol %r does not occur" % symbol)
    ctx = ctx.with_deformation(symbol)
    A, alpha_t = A.lift(ctx), alpha_t.lift(ctx)
    if not A.alpha.is_identity():
        raise AlgebraError("composition deformations start from a plain algebra (identity twist)")
    parts = split_map(alpha_t, symbol)
    if not parts[0].is_identity():
        raise AlgebraError("degree-0 part of alpha_t is not the identity")
    rep = check_endomorphism(A, alpha_t)
    if not rep.passed:
        raise TwistError("alpha_t is not an endomorphism identically in the parameters", rep)
    if A.mu.is_skew() and (A.flavor_hint == "malcev" or check_identity(A, "hom_malcev").passed):
        flavor = "malcev"
        A = A.replace(flavor_hint="malcev")
    elif check_left_alt(A).passed:
        flavor = "alternative"
    else:
        raise AlgebraError("base algebra is neither left alternative nor Malcev")
    mus = {}
    alphas = {}
    for d, a in parts.items():
        if d == 0:
            continue
        alphas[d] = a
        mus[d] = A.mu.compose(a)
    return FormalDeformation(A, mus, alphas, flavor, None, symbol)


def _truncator(ctx, symbol, order):
    def trunc(v):
        return tuple(truncate_in_t(x, order, symbol) for x in v)
    return trunc


def check_deformation_equation(D, up_to=None, max_witnesses=MAX_WITNESSES):
    """Verify the formal identity coefficientwise in t, for degrees 0..up_to.

    Alternative flavour: the linearized left Hom-alternative identity on basis
    triples.  Malcev flavour: the Hom-Malcev identity with generic x, y, z.
    """
    if up_to is None:
        up_to = D.order
    A = deformation_to_algebra(D)
    ctx, t = A.ctx, D.symbol
    trunc = _truncator(ctx, t, up_to)
    mu = lambda x, y: trunc(A.mu(x, y))
    al = lambda v: trunc(A.alpha(v))
    rep = CheckReport("deformation_equation[%s]" % D.flavor, max_witnesses=max_witnesses)
    residuals = []
    if D.flavor == "alternative":
        E = [A.basis(i) for i in range(A.dim)]
        cache = {}

        def assoc(i, j, k):
            key = (i, j, k)
            if key not in cache:
                cache[key] = _associator(mu, al, E[i], E[j], E[k])
            return cache[key]
        for i, j, k in product(range(A.dim), repeat=3):
            r = trunc(vadd(assoc(i, j, k), assoc(j, i, k)))
            residuals.append((A.basis_labels[i], A.basis_labels[j], A.basis_labels[k])), residuals.append(r)
    else:
        ext, (x, y, z), groups = generic_vectors(ctx, A.dim)
        B = A.lift(ext)
        tr = _truncator(ext, t, up_to)
        br = lambda u, v: tr(B.mu(u, v))
        alx = lambda v: tr(B.alpha(v))
        res = tr(_malcev_residual(br, alx, x, y, z))
        for key, v in split_generic(res, ext, ctx, groups).items():
            residuals.append((monomial_key_str(key),))
            residuals.append(v)
    bad_degrees = set()
    for where, r in zip(residuals[::2], residuals[1::2]):
        if not any(r):
            continue
        for d in range(up_to + 1):
            v = tuple(x.coefficient(t, d) for x in r)
            if any(v):
                bad_degrees.add(d)
                rep.add(tuple(where) + ("%s^%d" % (t, d),), v, "degree %d" % d)
    for d in range(up_to + 1):
        rep.notes.append("degree %d: %s" % (d, "FAIL" if d in bad_degrees else "ok"))
    return rep


def _series_inverse(rho, up_to, ctx, symbol):
    """Truncated inverse of id + R as a t-polynomial LinearMap."""
    dim = rho.dim
    tp = _t_powers(ctx, symbol, max(list(rho.terms) + [up_to]))
    one = Scalar.one(ctx)
    R = LinearMap([[Scalar.zero(ctx)] * dim] * dim)
    for d, r in rho.terms.items():
        if d <= up_to:
            R = R + r.lift(ctx).scale(tp[d])
    trunc = lambda f: f.map(lambda x: truncate_in_t(x, up_to, symbol))
    inv = LinearMap.identity(dim, one)
    power = LinearMap.identity(dim, one)
    for k in range(1, up_to + 1):
        power = trunc(-(R @ power))
        inv = inv + power
    full = LinearMap.identity(dim, one) + R
    return full, inv


def apply_equivalence(D, rho, up_to):
    """mu'_t = rho o mu_t o (rho^-1 x rho^-1), alpha'_t = rho o alpha_t o rho^-1, mod t^(up_to+1)."""
    if up_to is None or up_to < 0:
        raise ValueError("apply_equivalence needs an explicit truncation order")
    ctx, t = D.ctx, D.symbol
    rho_t, inv = _series_inverse(rho, up_to, ctx, t)
    A = deformation_to_algebra(D)
    trunc = _truncator(ctx, t, up_to)
    inv_imgs = inv.images()
    mu_new = [[trunc(rho_t(trunc(A.mu(inv_imgs[i], inv_imgs[j])))) for j in range(D.dim)]
              for i in range(D.dim)]
    alpha_new = LinearMap.from_images([trunc(rho_t(trunc(A.alpha(v)))) for v in inv_imgs])
    B = A.replace(mu=MultiplicationTable(mu_new), alpha=alpha_new)
    out = algebra_to_deformation(B, t, D.flavor)
    out.order = up_to
    return out
