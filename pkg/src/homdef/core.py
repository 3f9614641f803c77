"""
Hom-algebras given by structure constants, and the identity checkers.

A multiplication is stored as ``c[i][j][k]`` with mu(e_i, e_j) = sum_k c[i][j][k] e_k;
a linear map as ``m[i][j]``, the e_i-coordinate of the image of e_j.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import product

from .scalars import EMPTY, ParameterContext, Polynomial, Scalar, coerce

FLAVORS = ("general", "alternative", "malcev")
IDENTITIES = ("left_alt", "right_alt", "alternative", "hom_assoc", "hom_malcev",
              "hom_lie", "multiplicative", "skewsymmetric", "alternating_associator")
MAX_WITNESSES = 16


class AlgebraError(Exception):
    pass


# ---------------------------------------------------------------------------
# vectors

def vadd(u, v):
    return tuple(a + b for a, b in zip(u, v))


def vsub(u, v):
    return tuple(a - b for a, b in zip(u, v))


def vneg(u):
    return tuple(-a for a in u)


def vscale(c, u):
    return tuple(c * a for a in u)


def is_zero_vector(u):
    return not any(u)


def _zero_of(x):
    return x - x


# ---------------------------------------------------------------------------
# tables and maps

class MultiplicationTable:
    """Bilinear map on K^dim by structure constants."""

    def __init__(self, c):
        self.c = tuple(tuple(tuple(v) for v in row) for row in c)
        self.dim = len(self.c)
        for row in self.c:
            if len(row) != self.dim or any(len(v) != self.dim for v in row):
                raise AlgebraError("multiplication table is not %d^3" % self.dim)
        self.zero = _zero_of(self.c[0][0][0]) if self.dim else Fraction(0)

    @classmethod
    def zeros(cls, dim, zero=Fraction(0)):
        return cls([[[zero] * dim for _ in range(dim)] for _ in range(dim)])

    @classmethod
    def from_products(cls, dim, products, zero):
        """products: {(i, j): vector}; the rest is zero."""
        c = [[[zero] * dim for _ in range(dim)] for _ in range(dim)]
        for (i, j), v in products.items():
            c[i][j] = list(v)
        return cls(c)

    @cached_property
    def _nonzero(self):
        out = []
        for i, j in product(range(self.dim), repeat=2):
            ks = [(k, x) for k, x in enumerate(self.c[i][j]) if x]
            if ks:
                out.append((i, j, ks))
        return out

    def __call__(self, x, y):
        out = [None] * self.dim
        for i, j, ks in self._nonzero:
            xi = x[i]
            if not xi:
                continue
            yj = y[j]
            if not yj:
                continue
            xy = xi * yj
            for k, ck in ks:
                term = xy * ck
                out[k] = term if out[k] is None else out[k] + term
        zero = _zero_of(x[0]) if x else self.zero
        return tuple(zero if v is None else v for v in out)

    def product(self, i, j):
        return self.c[i][j]

    def map(self, fn):
        return MultiplicationTable([[[fn(x) for x in v] for v in row] for row in self.c])

    def lift(self, ctx):
        return self.map(lambda x: coerce(x, ctx))

    def compose(self, alpha):
        """alpha o mu."""
        return MultiplicationTable([[alpha(v) for v in row] for row in self.c])

    def precompose(self, f, g=None):
        """(x, y) -> mu(f x, g y)."""
        g = f if g is None else g
        cols_f = [f.image(i) for i in range(self.dim)]
        cols_g = [g.image(j) for j in range(self.dim)]
        return MultiplicationTable([[self(cols_f[i], cols_g[j]) for j in range(self.dim)]
                                    for i in range(self.dim)])

    def opposite(self):
        return MultiplicationTable([[self.c[j][i] for j in range(self.dim)] for i in range(self.dim)])

    def commutator(self):
        return MultiplicationTable([[vsub(self.c[i][j], self.c[j][i]) for j in range(self.dim)]
                                    for i in range(self.dim)])

    def __add__(self, other):
        return MultiplicationTable([[vadd(a, b) for a, b in zip(r, s)] for r, s in zip(self.c, other.c)])

    def __sub__(self, other):
        return MultiplicationTable([[vsub(a, b) for a, b in zip(r, s)] for r, s in zip(self.c, other.c)])

    def scale(self, s):
        return self.map(lambda x: s * x)

    def skew_violations(self):
        out = []
        for i in range(self.dim):
            for j in range(i, self.dim):
                r = vadd(self.c[i][j], self.c[j][i])
                if any(r):
                    out.append(((i, j), r))
        return out

    def is_skew(self):
        return not self.skew_violations()

    def is_zero(self):
        return not self._nonzero

    def __eq__(self, other):
        return (isinstance(other, MultiplicationTable) and self.dim == other.dim and
                all(a == b for r, s in zip(self.c, other.c) for u, v in zip(r, s) for a, b in zip(u, v)))

    def flatten(self):
        return [x for row in self.c for v in row for x in v]


class LinearMap:
    """Square matrix acting on coordinate vectors; column j is the image of e_j."""

    def __init__(self, m):
        self.m = tuple(tuple(r) for r in m)
        self.dim = len(self.m)
        if any(len(r) != self.dim for r in self.m):
            raise AlgebraError("linear map is not square")

    @classmethod
    def identity(cls, dim, one=Fraction(1)):
        zero = _zero_of(one)
        return cls([[one if i == j else zero for j in range(dim)] for i in range(dim)])

    @classmethod
    def from_images(cls, images):
        dim = len(images)
        return cls([[images[j][i] for j in range(dim)] for i in range(dim)])

    def image(self, j):
        return tuple(r[j] for r in self.m)

    def images(self):
        return [self.image(j) for j in range(self.dim)]

    def __call__(self, v):
        out = []
        for r in self.m:
            acc = None
            for a, x in zip(r, v):
                if a and x:
                    acc = a * x if acc is None else acc + a * x
            out.append(_zero_of(v[0]) if acc is None else acc)
        return tuple(out)

    def __matmul__(self, other):
        """self o other."""
        return LinearMap.from_images([self(v) for v in other.images()])

    def __pow__(self, n):
        out = LinearMap.identity(self.dim, self.m[0][0] - self.m[0][0] + 1)
        for _ in range(n):
            out = self @ out
        return out

    def __add__(self, other):
        return LinearMap([vadd(a, b) for a, b in zip(self.m, other.m)])

    def __sub__(self, other):
        return LinearMap([vsub(a, b) for a, b in zip(self.m, other.m)])

    def __neg__(self):
        return LinearMap([vneg(r) for r in self.m])

    def scale(self, s):
        return self.map(lambda x: s * x)

    def map(self, fn):
        return LinearMap([[fn(x) for x in r] for r in self.m])

    def lift(self, ctx):
        return self.map(lambda x: coerce(x, ctx))

    def is_identity(self):
        return all((x == 1) if i == j else not x for i, r in enumerate(self.m) for j, x in enumerate(r))

    def is_zero(self):
        return not any(x for r in self.m for x in r)

    def __eq__(self, other):
        return isinstance(other, LinearMap) and all(
            a == b for r, s in zip(self.m, other.m) for a, b in zip(r, s))

    def flatten(self):
        return [x for r in self.m for x in r]


# ---------------------------------------------------------------------------
# the algebra

@dataclass(frozen=True, eq=False)
class HomAlgebra:
    mu: MultiplicationTable
    alpha: LinearMap
    ctx: ParameterContext = EMPTY
    basis_labels: tuple = None
    flavor_hint: str = "general"
    name: str = ""

    def __post_init__(self):
        if self.mu.dim != self.alpha.dim:
            raise AlgebraError("multiplication of dimension %d, twist of dimension %d"
                               % (self.mu.dim, self.alpha.dim))
        labels = self.basis_labels
        if labels is None:
            labels = tuple("e%d" % i for i in range(self.dim))
        object.__setattr__(self, "basis_labels", tuple(labels))
        if len(self.basis_labels) != self.dim:
            raise AlgebraError("%d basis labels for dimension %d" % (len(self.basis_labels), self.dim))
        if self.flavor_hint not in FLAVORS:
            raise AlgebraError("unknown flavor %r" % self.flavor_hint)
        if self.flavor_hint == "malcev":
            bad = self.mu.skew_violations()
            if bad:
                (i, j), _ = bad[0]
                raise AlgebraError("malcev flavor needs a skewsymmetric table; fails at (%s, %s)"
                                   % (self.basis_labels[i], self.basis_labels[j]))

    @classmethod
    def build(cls, dim, products, alpha_images=None, ctx=EMPTY, **kw):
        """Convenience constructor from {(i, j): vector} and a list of images of alpha.

        Entries may be ints, Fractions, strings (parsed in ctx) or Scalars.
        """
        zero = Scalar.zero(ctx)
        prods = {ij: [coerce(x, ctx) for x in v] for ij, v in products.items()}
        mu = MultiplicationTable.from_products(dim, prods, zero)
        if alpha_images is None:
            alpha = LinearMap.identity(dim, Scalar.one(ctx))
        else:
            alpha = LinearMap.from_images([[coerce(x, ctx) for x in v] for v in alpha_images])
        return cls(mu, alpha, ctx, **kw)

    @property
    def dim(self):
        return self.mu.dim

    def replace(self, **kw):
        args = dict(mu=self.mu, alpha=self.alpha, ctx=self.ctx, basis_labels=self.basis_labels,
                    flavor_hint=self.flavor_hint, name=self.name)
        args.update(kw)
        return HomAlgebra(**args)

    def lift(self, ctx):
        if ctx is self.ctx:
            return self
        return self.replace(mu=self.mu.lift(ctx), alpha=self.alpha.lift(ctx), ctx=ctx)

    def zero(self):
        return Scalar.zero(self.ctx)

    def one(self):
        return Scalar.one(self.ctx)

    def basis(self, i):
        z, o = self.zero(), self.one()
        return tuple(o if k == i else z for k in range(self.dim))

    def vector(self, coords):
        if len(coords) != self.dim:
            raise AlgebraError("vector of length %d in dimension %d" % (len(coords), self.dim))
        return tuple(coerce(x, self.ctx) for x in coords)

    def is_numeric(self):
        return all(x.is_rational() for x in self.mu.flatten() + self.alpha.flatten())

    def numeric(self):
        """Same tables with Fraction entries (numeric algebras only)."""
        return (self.mu.map(lambda x: x.to_fraction()), self.alpha.map(lambda x: x.to_fraction()))

    def substitute(self, bindings):
        if not bindings:
            return self
        ctx = self.ctx.without(bindings)
        sub = lambda x: x.substitute(bindings)
        return self.replace(mu=self.mu.map(sub), alpha=self.alpha.map(sub), ctx=ctx)

    def format_vector(self, v):
        return format_vector(v, self.basis_labels)

    def __str__(self):
        lines = []
        for i, j in product(range(self.dim), repeat=2):
            v = self.mu.c[i][j]
            if any(v):
                lines.append("mu(%s, %s) = %s" % (self.basis_labels[i], self.basis_labels[j],
                                                  self.format_vector(v)))
        if self.alpha.is_identity():
            lines.append("alpha = identity")
        else:
            for j in range(self.dim):
                lines.append("alpha(%s) = %s" % (self.basis_labels[j], self.format_vector(self.alpha.image(j))))
        return "\n".join(lines)


def format_vector(v, labels):
    parts = []
    for x, lab in zip(v, labels):
        if not x:
            continue
        s = str(x)
        if x == 1:
            term = lab
        elif x == -1:
            term = "-" + lab
        elif isinstance(x, Scalar) and x.is_polynomial() and len(x.num.terms) == 1:
            term = "%s*%s" % (s, lab)
        elif isinstance(x, Scalar) and x.is_polynomial():
            term = "(%s)*%s" % (s, lab)
        else:
            term = "%s*%s" % (s, lab)
        parts.append(term)
    if not parts:
        return "0"
    out = parts[0]
    for p in parts[1:]:
        out += " - " + p[1:] if p.startswith("-") else " + " + p
    return out


# ---------------------------------------------------------------------------
# reports

@dataclass
class Witness:
    where: tuple
    residual: tuple
    note: str = ""

    def to_dict(self, labels=None):
        return {"where": [str(w) for w in self.where], "residual": [str(x) for x in self.residual],
                "note": self.note}


@dataclass
class CheckReport:
    identity: str
    passed: bool = True
    witnesses: list = field(default_factory=list)
    violations: int = 0
    notes: list = field(default_factory=list)
    domain: list = field(default_factory=list)
    max_witnesses: int = MAX_WITNESSES

    @property
    def verdict(self):
        return "pass" if self.passed else "fail"

    def add(self, where, residual, note=""):
        self.passed = False
        self.violations += 1
        if self.max_witnesses is None or len(self.witnesses) < self.max_witnesses:
            self.witnesses.append(Witness(tuple(where), tuple(residual), note))

    def merge(self, other, prefix=""):
        for w in other.witnesses:
            if self.max_witnesses is None or len(self.witnesses) < self.max_witnesses:
                self.witnesses.append(Witness(w.where, w.residual, (prefix + w.note).strip()))
        self.violations += other.violations
        self.passed = self.passed and other.passed
        self.notes.extend(other.notes)
        for d in other.domain:
            if d not in self.domain:
                self.domain.append(d)
        return self

    def __bool__(self):
        return self.passed

    def to_dict(self):
        return {"identity": self.identity, "verdict": self.verdict, "violations": self.violations,
                "witnesses": [w.to_dict() for w in self.witnesses], "notes": list(self.notes),
                "domain": list(self.domain)}

    @classmethod
    def from_dict(cls, d):
        rep = cls(d["identity"], d["verdict"] == "pass", [], d.get("violations", 0),
                  list(d.get("notes", [])), list(d.get("domain", [])), None)
        for w in d.get("witnesses", []):
            rep.witnesses.append(Witness(tuple(w["where"]), tuple(w["residual"]), w.get("note", "")))
        return rep

    def summary(self):
        s = "%s: %s" % (self.identity, self.verdict.upper())
        if not self.passed:
            s += " (%d violation%s)" % (self.violations, "" if self.violations == 1 else "s")
        return s


# ---------------------------------------------------------------------------
# trilinear expressions

def evaluate_mu(A, x, y):
    return A.mu(A.vector(x), A.vector(y))


def _associator(mu, alpha, x, y, z):
    return vsub(mu(alpha(x), mu(y, z)), mu(mu(x, y), alpha(z)))


def _jacobiator(br, alpha, x, y, z):
    a = br(br(x, y), alpha(z))
    b = br(br(y, z), alpha(x))
    c = br(br(z, x), alpha(y))
    return tuple(p + q + r for p, q, r in zip(a, b, c))


def _malcev_residual(br, alpha, x, y, z):
    lhs = _jacobiator(br, alpha, alpha(x), alpha(y), br(x, z))
    rhs = br(_jacobiator(br, alpha, x, y, z), alpha(alpha(x)))
    return vsub(lhs, rhs)


def hom_associator(A, x, y, z):
    """as(x, y, z) = mu(alpha x, mu(y, z)) - mu(mu(x, y), alpha z)."""
    return _associator(A.mu, A.alpha, A.vector(x), A.vector(y), A.vector(z))


def hom_jacobiator(A, x, y, z):
    if not A.mu.is_skew():
        raise AlgebraError("Hom-Jacobiator needs a skewsymmetric bracket")
    return _jacobiator(A.mu, A.alpha, A.vector(x), A.vector(y), A.vector(z))


def malcev_residual(A, x, y, z):
    """J(alpha x, alpha y, [x, z]) - [J(x, y, z), alpha^2 x]."""
    return _malcev_residual(A.mu, A.alpha, A.vector(x), A.vector(y), A.vector(z))


# ---------------------------------------------------------------------------
# fresh indeterminates

def fresh_names(ctx, stems, dim):
    taken = set(ctx.symbols)
    out = []
    for stem in stems:
        pre = stem + "_"
        while any((pre + str(i)) in taken for i in range(dim)):
            pre += "_"
        names = [pre + str(i) for i in range(dim)]
        taken.update(names)
        out.append(names)
    return out


def generic_vectors(ctx, dim, stems=("x", "y", "z")):
    """Vectors sum_i x_i e_i with fresh polynomial indeterminates, in an extended context."""
    groups = fresh_names(ctx, stems, dim)
    ext = ctx.extend([n for g in groups for n in g])
    vecs = [tuple(Scalar.var(ext, n) for n in g) for g in groups]
    return ext, vecs, groups


def split_generic(vec, ext, ctx, groups):
    """Coefficients of a polynomial vector in the fresh indeterminates.

    Returns {key: vector over ctx} where key names the fresh monomial, e.g.
    (("x", 0), ("x", 2), ("y", 1), ("z", 3)); zero coefficients are omitted.
    """
    fresh = [n for g in groups for n in g]
    fidx = [ext.index(n) for n in fresh]
    keep = [ext.index(s) for s in ctx.symbols]
    labels = []
    for g in groups:
        for i, n in enumerate(g):
            labels.append((n.rstrip("0123456789").rstrip("_"), i))
    dim = len(vec)
    acc = {}
    dens = []
    for k, s in enumerate(vec):
        if any(s.den.depends_on(i) for i in fidx):
            raise AlgebraError("denominator depends on a fresh indeterminate")
        dens.append(Polynomial(ctx, {tuple(e[i] for i in keep): c for e, c in s.den.terms.items()}))
        for e, c in s.num.terms.items():
            key = []
            for pos, i in enumerate(fidx):
                key.extend([labels[pos]] * e[i])
            key = tuple(key)
            slot = acc.setdefault(key, [dict() for _ in range(dim)])
            slot[k][tuple(e[i] for i in keep)] = c
    out = {}
    for key in sorted(acc):
        v = tuple(Scalar(Polynomial(ctx, t), d) for t, d in zip(acc[key], dens))
        if any(v):
            out[key] = v
    return out


def monomial_key_str(key):
    return "*".join("%s%d" % (s, i) for s, i in key) if key else "1"


# ---------------------------------------------------------------------------
# checks

def _basis_scalar(dim, ctx):
    z, o = Scalar.zero(ctx), Scalar.one(ctx)
    return [tuple(o if k == i else z for k in range(dim)) for i in range(dim)]


def _labels(A, *idx):
    return tuple(A.basis_labels[i] for i in idx)


def check_left_alt(A, report=None, max_witnesses=MAX_WITNESSES):
    rep = report or CheckReport("left_alt", max_witnesses=max_witnesses)
    E = _basis_scalar(A.dim, A.ctx)
    mu, al = A.mu, A.alpha
    cache = {}
    for i, j, k in product(range(A.dim), repeat=3):
        a = cache.get((i, j, k))
        if a is None:
            a = cache[i, j, k] = _associator(mu, al, E[i], E[j], E[k])
        b = cache.get((j, i, k))
        if b is None:
            b = cache[j, i, k] = _associator(mu, al, E[j], E[i], E[k])
        r = vadd(a, b)
        if any(r):
            rep.add(_labels(A, i, j, k), r, "as(x,y,z)+as(y,x,z)")
    return rep


def check_right_alt(A, report=None, max_witnesses=MAX_WITNESSES):
    rep = report or CheckReport("right_alt", max_witnesses=max_witnesses)
    E = _basis_scalar(A.dim, A.ctx)
    mu, al = A.mu, A.alpha
    cache = {}
    for i, j, k in product(range(A.dim), repeat=3):
        a = cache.get((i, j, k))
        if a is None:
            a = cache[i, j, k] = _associator(mu, al, E[i], E[j], E[k])
        b = cache.get((i, k, j))
        if b is None:
            b = cache[i, k, j] = _associator(mu, al, E[i], E[k], E[j])
        r = vadd(a, b)
        if any(r):
            rep.add(_labels(A, i, j, k), r, "as(x,y,z)+as(x,z,y)")
    return rep


def check_hom_assoc(A, max_witnesses=MAX_WITNESSES):
    rep = CheckReport("hom_assoc", max_witnesses=max_witnesses)
    E = _basis_scalar(A.dim, A.ctx)
    for i, j, k in product(range(A.dim), repeat=3):
        r = _associator(A.mu, A.alpha, E[i], E[j], E[k])
        if any(r):
            rep.add(_labels(A, i, j, k), r, "as(x,y,z)")
    return rep


def check_skew(A, max_witnesses=MAX_WITNESSES):
    rep = CheckReport("skewsymmetric", max_witnesses=max_witnesses)
    for (i, j), r in A.mu.skew_violations():
        rep.add(_labels(A, i, j), r, "mu(x,y)+mu(y,x)")
    return rep


def check_multiplicative(A, max_witnesses=MAX_WITNESSES):
    rep = CheckReport("multiplicative", max_witnesses=max_witnesses)
    imgs = A.alpha.images()
    for i, j in product(range(A.dim), repeat=2):
        r = vsub(A.mu(imgs[i], imgs[j]), A.alpha(A.mu.c[i][j]))
        if any(r):
            rep.add(_labels(A, i, j), r, "mu(ax,ay)-a(mu(x,y))")
    return rep


def check_hom_lie(A, max_witnesses=MAX_WITNESSES):
    rep = check_skew(A, max_witnesses)
    rep.identity = "hom_lie"
    E = _basis_scalar(A.dim, A.ctx)
    for i, j, k in product(range(A.dim), repeat=3):
        r = _jacobiator(A.mu, A.alpha, E[i], E[j], E[k])
        if any(r):
            rep.add(_labels(A, i, j, k), r, "J(x,y,z)")
    return rep


def check_hom_malcev(A, max_witnesses=MAX_WITNESSES):
    """Hom-Malcev identity verified with x, y, z generic (fresh indeterminates)."""
    rep = check_skew(A, max_witnesses)
    rep.identity = "hom_malcev"
    if not rep.passed:
        rep.notes.append("bracket is not skewsymmetric")
        return rep
    ext, (x, y, z), groups = generic_vectors(A.ctx, A.dim)
    B = A.lift(ext)
    res = _malcev_residual(B.mu, B.alpha, x, y, z)
    for key, v in split_generic(res, ext, A.ctx, groups).items():
        rep.add((monomial_key_str(key),), v, "coefficient in J(ax,ay,[x,z])-[J(x,y,z),a^2x]")
    return rep


def check_identity(A, which, max_witnesses=MAX_WITNESSES):
    """Check a Hom-identity on A; returns a CheckReport listing violations."""
    if which == "left_alt":
        return check_left_alt(A, max_witnesses=max_witnesses)
    if which == "right_alt":
        return check_right_alt(A, max_witnesses=max_witnesses)
    if which == "alternative":
        rep = CheckReport("alternative", max_witnesses=max_witnesses)
        rep.merge(check_left_alt(A, max_witnesses=max_witnesses), "left: ")
        rep.merge(check_right_alt(A, max_witnesses=max_witnesses), "right: ")
        return rep
    if which == "hom_assoc":
        return check_hom_assoc(A, max_witnesses)
    if which == "hom_malcev":
        return check_hom_malcev(A, max_witnesses)
    if which == "hom_lie":
        return check_hom_lie(A, max_witnesses)
    if which == "multiplicative":
        return check_multiplicative(A, max_witnesses)
    if which == "skewsymmetric":
        return check_skew(A, max_witnesses)
    if which == "alternating_associator":
        return check_alternating_associator(A, max_witnesses)
    raise AlgebraError("unknown identity %r (expected one of %s)" % (which, ", ".join(IDENTITIES)))


def check_alternating_associator(A, max_witnesses=MAX_WITNESSES):
    """as(x,y,z) = -as(y,x,z) = -as(x,z,y) = -as(z,y,x) on all basis triples."""
    rep = CheckReport("alternating_associator", max_witnesses=max_witnesses)
    E = _basis_scalar(A.dim, A.ctx)
    n = A.dim
    table = {}
    for i, j, k in product(range(n), repeat=3):
        table[i, j, k] = _associator(A.mu, A.alpha, E[i], E[j], E[k])
    for i, j, k in product(range(n), repeat=3):
        a = table[i, j, k]
        for other, note in (((j, i, k), "as(x,y,z)+as(y,x,z)"), ((i, k, j), "as(x,y,z)+as(x,z,y)"),
                            ((k, j, i), "as(x,y,z)+as(z,y,x)")):
            r = vadd(a, table[other])
            if any(r):
                rep.add(_labels(A, i, j, k), r, note)
    return rep


def check_morphism(A, B, f, max_witnesses=MAX_WITNESSES):
    """mu' o (f x f) = f o mu and f o alpha = alpha' o f, on basis elements."""
    if A.dim != B.dim or f.dim != A.dim:
        raise AlgebraError("dimension mismatch")
    ctx = A.ctx.union(B.ctx)
    A, B = A.lift(ctx), B.lift(ctx)
    f = f.lift(ctx)
    rep = CheckReport("morphism", max_witnesses=max_witnesses)
    imgs = f.images()
    for i, j in product(range(A.dim), repeat=2):
        r = vsub(B.mu(imgs[i], imgs[j]), f(A.mu.c[i][j]))
        if any(r):
            rep.add(_labels(A, i, j), r, "mu'(fx,fy)-f(mu(x,y))")
    for j in range(A.dim):
        r = vsub(f(A.alpha.image(j)), B.alpha(imgs[j]))
        if any(r):
            rep.add(_labels(A, j), r, "f(a x)-a'(f x)")
    return rep


def check_endomorphism(A, f, max_witnesses=MAX_WITNESSES):
    """Multiplication part only: mu(f x, f y) = f(mu(x, y))."""
    ctx = A.ctx.union(f_ctx(f))
    A = A.lift(ctx)
    f = f.lift(ctx)
    rep = CheckReport("endomorphism", max_witnesses=max_witnesses)
    imgs = f.images()
    for i, j in product(range(A.dim), repeat=2):
        r = vsub(A.mu(imgs[i], imgs[j]), f(A.mu.c[i][j]))
        if any(r):
            rep.add(_labels(A, i, j), r, "mu(fx,fy)-f(mu(x,y))")
    return rep


def f_ctx(f):
    for x in f.flatten():
        if isinstance(x, Scalar):
            return x.ctx
    return EMPTY


def commutator_algebra(A):
    """[x, y] = mu(x, y) - mu(y, x), same twist."""
    return A.replace(mu=A.mu.commutator(), flavor_hint="malcev",
                     name=(A.name + "^-") if A.name else "")


def opposite_algebra(A):
    flavor = A.flavor_hint
    return A.replace(mu=A.mu.opposite(), flavor_hint=flavor, name=(A.name + "^op") if A.name else "")
