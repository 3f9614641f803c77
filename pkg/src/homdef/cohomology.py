"""
Coboundary operators and the low-degree cohomology of Hom-alternative and
Hom-Malcev algebras.

Flattening orders (fixed, so bases are reproducible):
  C^1          matrix row-major, coordinate i*dim + j is the e_i coefficient of f(e_j)
  C^2 (alt)    lexicographic (i, j, k), coordinate (i*dim + j)*dim + k
  C^2 (malcev) pairs i < j in lexicographic order, then k

The solvers work over Fraction tables; parametric families go through
`verify_cochain`, which checks identities symbolically.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, product

from . import linalg
from .core import (AlgebraError, CheckReport, LinearMap, MAX_WITNESSES, MultiplicationTable,
                   _jacobiator, f_ctx, generic_vectors, monomial_key_str, split_generic, vadd, vsub)
from .scalars import EMPTY, Scalar, coerce

FLAVORS = ("alternative", "malcev")


class CohomologyError(AlgebraError):
    pass


@dataclass
class TwoCochain:
    table: MultiplicationTable
    flavor: str = "alternative"

    def __post_init__(self):
        if self.flavor not in FLAVORS:
            raise CohomologyError("unknown flavor %r" % self.flavor)
        if self.flavor == "malcev" and not self.table.is_skew():
            raise CohomologyError("malcev 2-cochain must be skewsymmetric")

    @property
    def dim(self):
        return self.table.dim


def _table(phi):
    return phi.table if isinstance(phi, TwoCochain) else phi


def _check_flavor(flavor):
    if flavor not in FLAVORS:
        raise CohomologyError("unknown flavor %r" % flavor)


# ---------------------------------------------------------------------------
# operators

def _basis(dim, one):
    zero = one - one
    return [tuple(one if k == i else zero for k in range(dim)) for i in range(dim)]


def _delta1(mu, f):
    dim = mu.dim
    imgs = f.images()
    one = mu.zero + 1
    E = _basis(dim, one)
    return MultiplicationTable([[vsub(vadd(mu(imgs[i], E[j]), mu(E[i], imgs[j])), f(mu.c[i][j]))
                                 for j in range(dim)] for i in range(dim)])


def delta1(A, f):
    """delta^1 f = mu(f x, y) + mu(x, f y) - f(mu(x, y))."""
    if f.dim != A.dim:
        raise CohomologyError("1-cochain of dimension %d on a %d-dimensional algebra" % (f.dim, A.dim))
    ctx = A.ctx.union(f_ctx(f))
    return _delta1(A.lift(ctx).mu, f.lift(ctx))


def _delta2_alt_triple(mu, alpha, phi, x, y, z):
    def half(x, y, z):
        ax, az = alpha(x), alpha(z)
        out = vsub(mu(phi(x, y), az), mu(ax, phi(y, z)))
        out = vadd(out, phi(mu(x, y), az))
        return vsub(out, phi(ax, mu(y, z)))
    return vadd(half(x, y, z), half(y, x, z))


def _delta2_alt(mu, alpha, phi, half=False):
    """[(i, j, k), value] over all basis triples (i <= j only if `half`: the form is symmetric in x, y)."""
    E = _basis(mu.dim, mu.zero + 1)
    return [((i, j, k), _delta2_alt_triple(mu, alpha, phi, E[i], E[j], E[k]))
            for i, j, k in product(range(mu.dim), repeat=3) if not half or i <= j]


def _jij(br_i, br_j, alpha, x, y, z):
    """J^{i,j}(x, y, z) = cyclic sum [[x, y]_i, alpha z]_j."""
    out = br_j(br_i(x, y), alpha(z))
    out = vadd(out, br_j(br_i(y, z), alpha(x)))
    return vadd(out, br_j(br_i(z, x), alpha(y)))


def _delta2_malcev_vec(br, alpha, phi, x, y, z):
    ax, ay, aax = alpha(x), alpha(y), alpha(alpha(x))
    bxz = br(x, z)
    lhs = _jij(phi, br, alpha, ax, ay, bxz)
    lhs = vadd(lhs, _jij(br, phi, alpha, ax, ay, bxz))
    lhs = vadd(lhs, _jij(br, br, alpha, ax, ay, phi(x, z)))
    rhs = br(_jij(phi, br, alpha, x, y, z), aax)
    rhs = vadd(rhs, br(_jij(br, phi, alpha, x, y, z), aax))
    rhs = vadd(rhs, phi(_jij(br, br, alpha, x, y, z), aax))
    return vsub(lhs, rhs)


def _delta2_malcev(A, phi):
    """{fresh monomial key: vector}; x enters quadratically so there is no trilinear table."""
    ext, (x, y, z), groups = generic_vectors(A.ctx, A.dim)
    B = A.lift(ext)
    ph = phi.lift(ext)
    res = _delta2_malcev_vec(B.mu, B.alpha, ph, x, y, z)
    return split_generic(res, ext, A.ctx, groups)


def delta2(A, phi, flavor="alternative"):
    """delta^2 phi as {key: nonzero vector}.

    alternative: keys are basis index triples (i, j, k);
    malcev: keys are monomials in fresh coordinates x_a, y_b, z_c (see monomial_key_str).
    """
    _check_flavor(flavor)
    if isinstance(phi, TwoCochain) and phi.flavor != flavor:
        raise CohomologyError("cochain flavor %s, requested %s" % (phi.flavor, flavor))
    table = _table(phi)
    if table.dim != A.dim:
        raise CohomologyError("2-cochain of dimension %d on a %d-dimensional algebra" % (table.dim, A.dim))
    ctx = A.ctx
    for x in table.flatten():
        if isinstance(x, Scalar):
            ctx = ctx.union(x.ctx)
            break
    A = A.lift(ctx)
    table = table.lift(ctx)
    if flavor == "alternative":
        return {key: v for key, v in _delta2_alt(A.mu, A.alpha, table) if any(v)}
    if not A.mu.is_skew():
        raise CohomologyError("malcev flavor needs a skewsymmetric bracket")
    if not table.is_skew():
        raise CohomologyError("malcev 2-cochain must be skewsymmetric")
    return _delta2_malcev(A, table)


# ---------------------------------------------------------------------------
# flattening

def flatten_1(f):
    return list(f.flatten())


def unflatten_1(v, dim):
    return LinearMap([list(v[i * dim:(i + 1) * dim]) for i in range(dim)])


def malcev_pairs(dim):
    return list(combinations(range(dim), 2))


def flatten_2(table, flavor="alternative"):
    if flavor == "alternative":
        return table.flatten()
    return [table.c[i][j][k] for i, j in malcev_pairs(table.dim) for k in range(table.dim)]


def unflatten_2(v, dim, flavor="alternative"):
    zero = v[0] - v[0] if v else Fraction(0)
    c = [[[zero] * dim for _ in range(dim)] for _ in range(dim)]
    if flavor == "alternative":
        for i, j, k in product(range(dim), repeat=3):
            c[i][j][k] = v[(i * dim + j) * dim + k]
    else:
        for p, (i, j) in enumerate(malcev_pairs(dim)):
            for k in range(dim):
                c[i][j][k] = v[p * dim + k]
                c[j][i][k] = -v[p * dim + k]
    return MultiplicationTable(c)


def cochain_tag(degree, dim, flavor="alternative"):
    if degree == 1:
        return "C1[row-major (i,j)] dim=%d" % dim
    if flavor == "alternative":
        return "C2[lex (i,j,k)] dim=%d" % dim
    return "C2s[pairs i<j, then k] dim=%d" % dim


# ---------------------------------------------------------------------------
# numeric solvers

def _numeric(A):
    if not A.is_numeric():
        raise CohomologyError("%s has parametric entries; use verify_cochain for symbolic families"
                              % (A.name or "algebra"))
    return A.numeric()


def _unit_maps(dim):
    out = []
    for i, j in product(range(dim), repeat=2):
        m = [[Fraction(0)] * dim for _ in range(dim)]
        m[i][j] = Fraction(1)
        out.append(LinearMap(m))
    return out


def commutant_space(A):
    """{f : f alpha = alpha f} in C^1 coordinates."""
    _, alpha = _numeric(A)
    cols = [flatten_1(f @ alpha - alpha @ f) for f in _unit_maps(A.dim)]
    return linalg.nullspace(linalg.Matrix.from_columns(cols, A.dim ** 2), cochain_tag(1, A.dim))


def _cochain_space_1(A, relax_commutant):
    if relax_commutant:
        return linalg.SubspaceBasis(A.dim ** 2, [flatten_1(f) for f in _unit_maps(A.dim)],
                                    cochain_tag(1, A.dim), check=False)
    return commutant_space(A)


def derivation_space(A, relax_commutant=False):
    """Basis of {f in C^1 : delta^1 f = 0}."""
    mu, alpha = _numeric(A)
    dim = A.dim
    cols = []
    for f in _unit_maps(dim):
        col = _delta1(mu, f).flatten()
        if not relax_commutant:
            col = col + flatten_1(f @ alpha - alpha @ f)
        cols.append(col)
    M = linalg.Matrix.from_columns(cols, len(cols[0]))
    return linalg.nullspace(M, cochain_tag(1, dim))


def delta1_matrix(A, flavor="alternative", relax_commutant=False):
    """(matrix of delta^1 on a basis of C^1, that basis)."""
    mu, _ = _numeric(A)
    C1 = _cochain_space_1(A, relax_commutant)
    cols = [flatten_2(_delta1(mu, unflatten_1(v, A.dim)), flavor) for v in C1]
    n = A.dim ** 3 if flavor == "alternative" else len(malcev_pairs(A.dim)) * A.dim
    return linalg.Matrix.from_columns(cols, n), C1


def two_coboundary_space(A, flavor="alternative", relax_commutant=False):
    _check_flavor(flavor)
    M, C1 = delta1_matrix(A, flavor, relax_commutant)
    if not C1.dim:
        n = A.dim ** 3 if flavor == "alternative" else len(malcev_pairs(A.dim)) * A.dim
        return linalg.SubspaceBasis(n, [], cochain_tag(2, A.dim, flavor))
    return linalg.column_space(M, cochain_tag(2, A.dim, flavor))


def _malcev_condition_columns(A, tables):
    ext, (x, y, z), groups = generic_vectors(EMPTY, A.dim)
    B = A.lift(ext)
    keyed = []
    keys = set()
    for t in tables:
        ph = t.map(lambda q: coerce(q, ext))
        res = _delta2_malcev_vec(B.mu, B.alpha, ph, x, y, z)
        d = split_generic(res, ext, EMPTY, groups)
        keyed.append(d)
        keys.update(d)
    keys = sorted(keys)
    cols = []
    for d in keyed:
        col = []
        for key in keys:
            v = d.get(key)
            col.extend([s.to_fraction() for s in v] if v else [Fraction(0)] * A.dim)
        cols.append(col)
    return cols, len(keys) * A.dim


def two_cocycle_space(A, flavor="alternative"):
    """Basis of ker delta^2 in C^2 coordinates of the given flavor."""
    _check_flavor(flavor)
    mu, alpha = _numeric(A)
    dim = A.dim
    n = dim ** 3 if flavor == "alternative" else len(malcev_pairs(dim)) * dim
    tables = []
    for b in range(n):
        v = [Fraction(0)] * n
        v[b] = Fraction(1)
        tables.append(unflatten_2(v, dim, flavor))
    if flavor == "alternative":
        cols = [[x for _, val in _delta2_alt(mu, alpha, t, half=True) for x in val] for t in tables]
        rows = dim ** 3 * (dim + 1) // 2
    else:
        if not mu.is_skew():
            raise CohomologyError("malcev flavor needs a skewsymmetric bracket")
        cols, rows = _malcev_condition_columns(A, tables)
    if rows == 0:
        return linalg.SubspaceBasis(n, [linalg.Matrix.identity(n).column(i) for i in range(n)],
                                    cochain_tag(2, dim, flavor), check=False)
    return linalg.nullspace(linalg.Matrix.from_columns(cols, rows), cochain_tag(2, dim, flavor))


@dataclass
class H2Report:
    flavor: str
    dim_z2: int
    dim_b2: int
    dim_intersection: int
    contained: bool
    dim_h2: int = None
    violation: tuple = None
    relax_commutant: bool = False
    family: list = field(default_factory=list)

    def to_dict(self):
        d = {"flavor": self.flavor, "dim_Z2": self.dim_z2, "dim_B2": self.dim_b2,
             "dim_Z2_cap_B2": self.dim_intersection, "B2_in_Z2": self.contained,
             "dim_H2": self.dim_h2, "relax_commutant": self.relax_commutant}
        if self.violation is not None:
            d["violation"] = {"index": self.violation[0], "vector": [str(x) for x in self.violation[1]]}
        if self.family:
            d["family"] = [dict(f) for f in self.family]
        return d

    def summary(self):
        lines = ["dim Z² = %d" % self.dim_z2, "dim B² = %d" % self.dim_b2,
                 "dim Z² ∩ B² = %d" % self.dim_intersection,
                 "B² ⊆ Z²: %s" % ("yes" if self.contained else "NO")]
        if self.dim_h2 is not None:
            lines.append("dim H² = %d" % self.dim_h2)
        else:
            lines.append("B² basis vector %d is not a cocycle" % self.violation[0])
        if self.relax_commutant:
            lines.append("(C1 relaxed to all linear maps)")
        for f in self.family:
            lines.append("  %s: cocycle=%s coboundary=%s" % (f["name"], f["in_Z2"], f["in_B2"]))
        return "\n".join(lines)


def h2_report(A, flavor="alternative", family=None, relax_commutant=False):
    """Z^2, B^2, their intersection and dim H^2 = dim Z^2 - dim(Z^2 cap B^2).

    `family` is an optional {name: flattened cochain} whose members are tested
    for membership in Z^2 and B^2.
    """
    z = two_cocycle_space(A, flavor)
    b = two_coboundary_space(A, flavor, relax_commutant)
    inter = linalg.intersection_dim(z, b)
    violation = None
    for i, v in enumerate(b.vectors):
        if not z.contains(v):
            violation = (i, v)
            break
    rep = H2Report(flavor, z.dim, b.dim, inter, violation is None,
                   z.dim - inter if violation is None else None, violation, relax_commutant)
    for name, v in (family or {}).items():
        v = [Fraction(x) if not isinstance(x, Scalar) else x.to_fraction() for x in v]
        rep.family.append({"name": name, "in_Z2": z.contains(v), "in_B2": b.contains(v)})
    return rep


# ---------------------------------------------------------------------------
# symbolic verification

def family_vectors(cochain, params, flavor="alternative"):
    """{param: flattened coefficient vector} for a family linear in `params`.

    Accepts a LinearMap (1-cochain) or a MultiplicationTable (2-cochain).
    Raises if some entry is not linear with rational coefficients in params.
    """
    if isinstance(cochain, LinearMap):
        flat = flatten_1(cochain)
    else:
        flat = flatten_2(_table(cochain), flavor)
    out = {}
    for p in params:
        vec = []
        for x in flat:
            if p not in x.ctx.symbols:
                vec.append(Fraction(0))
                continue
            if x.degree_in(p) > 1:
                raise CohomologyError("entry %s is not linear in %s" % (x, p))
            c = x.coefficient(p, 1)
            if not c.is_rational():
                raise CohomologyError("coefficient of %s in %s is not a rational number" % (p, x))
            vec.append(c.to_fraction())
        out[p] = vec
    for x, parts in zip(flat, zip(*out.values()) if out else [() for _ in flat]):
        rest = x
        for p, c in zip(out, parts):
            if c:
                rest = rest - Scalar.var(x.ctx, p) * c
        if rest:
            raise CohomologyError("entry %s has a part %s outside the span of the parameters" % (x, rest))
    return out


def _domain(entries):
    out = []
    for x in entries:
        if isinstance(x, Scalar):
            for d in x.denominator_factors():
                s = "%s != 0" % d
                if s not in out:
                    out.append(s)
    return sorted(out)


def verify_cochain(A, cochain, claim, target=None, flavor=None, max_witnesses=MAX_WITNESSES):
    """Check a (possibly parametric) cochain identically in all parameters.

    claim: "derivation" (delta^1 f = 0), "cocycle" (delta^2 phi = 0) or
    "coboundary" (delta^1 f = target).  Denominators are reported as domain
    restrictions.
    """
    flavor = flavor or ("malcev" if A.flavor_hint == "malcev" else "alternative")
    _check_flavor(flavor)
    if isinstance(cochain, TwoCochain):
        flavor = cochain.flavor
    table = _table(cochain)
    entries = list(table.flatten())
    if target is not None:
        entries += list(_table(target).flatten())
    ctx = A.ctx
    for x in entries:
        if isinstance(x, Scalar):
            ctx = ctx.union(x.ctx)
    A = A.lift(ctx)
    rep = CheckReport("%s[%s]" % (claim, flavor), max_witnesses=max_witnesses)
    rep.domain = _domain(entries + A.mu.flatten() + A.alpha.flatten())
    labels = A.basis_labels
    if claim in ("derivation", "coboundary"):
        if not isinstance(cochain, LinearMap):
            raise CohomologyError("%s needs a 1-cochain" % claim)
        f = cochain.lift(ctx)
        d = _delta1(A.mu, f)
        if claim == "coboundary":
            if target is None:
                raise CohomologyError("coboundary claim needs a target 2-cochain")
            d = d - _table(target).lift(ctx)
        for i, j in product(range(A.dim), repeat=2):
            if any(d.c[i][j]):
                rep.add((labels[i], labels[j]), d.c[i][j])
        comm = f @ A.alpha - A.alpha @ f
        rep.notes.append("commutes with alpha: %s" % ("yes" if comm.is_zero() else "no"))
    elif claim == "cocycle":
        if isinstance(cochain, LinearMap):
            raise CohomologyError("cocycle claim needs a 2-cochain")
        res = delta2(A, table.lift(ctx), flavor)
        for key, v in res.items():
            where = tuple(labels[i] for i in key) if flavor == "alternative" else (monomial_key_str(key),)
            rep.add(where, v)
    else:
        raise CohomologyError("unknown claim %r" % claim)
    return rep
