"""
Plain-text description of a Hom-algebra, a linear map or a 2-cochain.

    # comment
    name: mu41
    basis: e0 e1 e2 e3
    params: a1 a2 t
    deformation: t
    flavor: malcev             # general | alternative | malcev
    skew_complete: true        # fill mu(y, x) = -mu(x, y) where not given
    mu(e2, e3) = e1 + t*(a1 - a2)*e1
    alpha(e0) = e0 + t*a1*e1
    alpha = identity

Bilinear lines start with mu, bracket or phi; linear-map lines with alpha, f,
g, map or rho.  Right-hand sides are linear combinations of basis labels with
coefficients in the scalar expression grammar.  Products not listed are zero;
images not listed are the basis vector itself (identity).
"""

import re
from dataclasses import dataclass, field

from .core import HomAlgebra, LinearMap, MultiplicationTable, format_vector
from .scalars import (IDENT, ExpressionError, ParameterContext, Scalar, ScalarError,
                      parse_expression)

BILINEAR = ("mu", "bracket", "phi")
LINEAR = ("alpha", "f", "g", "map", "rho")
HEADERS = ("name", "basis", "params", "deformation", "flavor", "skew_complete")

_BILINE = re.compile(r"^(\w+)\s*\(\s*(\w+)\s*,\s*(\w+)\s*\)\s*=\s*(.*)$")
_LINE = re.compile(r"^(\w+)\s*\(\s*(\w+)\s*\)\s*=\s*(.*)$")
_IDLINE = re.compile(r"^(\w+)\s*=\s*identity\s*$")


class SpecError(ScalarError):
    def __init__(self, msg, line=0, col=0, source=""):
        where = "%s:" % source if source else ""
        ScalarError.__init__(self, "%sline %d, column %d: %s" % (where, line, col, msg) if line else msg)
        self.msg = msg
        self.line = line
        self.col = col


@dataclass
class SpecData:
    labels: tuple
    ctx: ParameterContext
    name: str = ""
    flavor: str = "general"
    skew_complete: bool = False
    bilinear: dict = field(default_factory=dict)     # kind -> {(i, j): vector}
    linear: dict = field(default_factory=dict)       # kind -> {j: vector}
    identity_maps: set = field(default_factory=set)
    lines: dict = field(default_factory=dict)        # (kind, key) -> line number

    @property
    def dim(self):
        return len(self.labels)

    def zero(self):
        return Scalar.zero(self.ctx)

    def table(self, kinds=BILINEAR):
        found = [k for k in kinds if k in self.bilinear]
        if len(found) > 1:
            raise SpecError("both %s and %s given" % tuple(found[:2]))
        prods = dict(self.bilinear[found[0]]) if found else {}
        kind = found[0] if found else None
        if self.skew_complete:
            neg = lambda v: tuple(-x for x in v)
            for (i, j), v in list(prods.items()):
                if (j, i) in prods:
                    if i != j and prods[(j, i)] != neg(v):
                        raise SpecError("skew completion conflicts with the given %s(%s, %s)"
                                        % (kind, self.labels[j], self.labels[i]),
                                        self.lines.get((kind, (j, i)), 0), 1)
                    if i == j and any(v):
                        raise SpecError("skew completion: %s(%s, %s) must be zero"
                                        % (kind, self.labels[i], self.labels[i]),
                                        self.lines.get((kind, (i, j)), 0), 1)
                else:
                    prods[(j, i)] = neg(v)
        return MultiplicationTable.from_products(self.dim, prods, self.zero())

    def has_map(self, kinds=LINEAR):
        return any(k in self.linear or k in self.identity_maps for k in kinds)

    def map(self, kinds=LINEAR):
        found = [k for k in kinds if k in self.linear or k in self.identity_maps]
        if len(found) > 1:
            raise SpecError("several linear maps given (%s); say which one" % ", ".join(found))
        one, zero = Scalar.one(self.ctx), self.zero()
        images = [tuple(one if k == j else zero for k in range(self.dim)) for j in range(self.dim)]
        if found and found[0] in self.linear:
            for j, v in self.linear[found[0]].items():
                images[j] = v
        return LinearMap.from_images(images)

    def algebra(self):
        mu = self.table()
        alpha = self.map(("alpha",))
        return HomAlgebra(mu, alpha, self.ctx, self.labels, self.flavor, self.name)


def _truthy(text, lineno, col):
    t = text.strip().lower()
    if t in ("true", "yes", "1"):
        return True
    if t in ("false", "no", "0"):
        return False
    raise SpecError("expected true or false, got %r" % text.strip(), lineno, col)


def _parse_vector(text, ctx, labels, lineno, col):
    """Linear combination of labels -> coordinate vector over ctx."""
    ext = ctx.extend(labels)
    try:
        s = parse_expression(text, ext, lineno, col)
    except ExpressionError as e:
        raise SpecError(e.msg, e.line, e.col) from None
    lidx = [ext.index(l) for l in labels]
    if any(s.den.depends_on(i) for i in lidx):
        raise SpecError("basis labels may not appear in a denominator", lineno, col)
    for e in s.num.terms:
        if sum(e[i] for i in lidx) != 1:
            raise SpecError("right-hand side must be linear in the basis labels (%s)" % s, lineno, col)
    zero = {l: 0 for l in labels}
    out = []
    for l in labels:
        c = s.coefficient(l, 1)
        out.append(c.substitute(zero) if c else Scalar.zero(ctx))
    return tuple(_restrict(x, ctx) for x in out)


def _restrict(x, ctx):
    return x if x.ctx == ctx else x.lift(ctx)


def parse_spec(text, source=""):
    labels = None
    params = ()
    tsym = None
    header = {}
    body = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].rstrip()
        if not line.strip():
            continue
        stripped = line.strip()
        col0 = len(line) - len(line.lstrip()) + 1
        m = re.match(r"^(\w+)\s*:(.*)$", stripped)
        if m and m.group(1) in HEADERS:
            key, val = m.group(1), m.group(2).strip()
            if key in header:
                raise SpecError("duplicate header %r" % key, lineno, col0, source)
            header[key] = (val, lineno, col0 + stripped.index(":") + 1)
            continue
        if m:
            raise SpecError("unknown header %r" % m.group(1), lineno, col0, source)
        body.append((lineno, col0, stripped))
    if "basis" not in header:
        raise SpecError("missing 'basis:' header", 0, 0, source)
    val, ln, col = header["basis"]
    labels = tuple(val.replace(",", " ").split())
    if not labels:
        raise SpecError("empty basis", ln, col, source)
    if len(set(labels)) != len(labels):
        raise SpecError("repeated basis label", ln, col, source)
    for l in labels:
        if not IDENT.match(l):
            raise SpecError("bad basis label %r" % l, ln, col, source)
    if "params" in header:
        val, ln, col = header["params"]
        params = tuple(val.replace(",", " ").split())
        for p in params:
            if not IDENT.match(p):
                raise SpecError("bad parameter name %r" % p, ln, col, source)
            if p in labels:
                raise SpecError("parameter %r clashes with a basis label" % p, ln, col, source)
        if len(set(params)) != len(params):
            raise SpecError("repeated parameter", ln, col, source)
    if "deformation" in header:
        val, ln, col = header["deformation"]
        tsym = val.strip()
        if not IDENT.match(tsym) or tsym in labels:
            raise SpecError("bad deformation symbol %r" % tsym, ln, col, source)
        if tsym not in params:
            params = params + (tsym,)
    ctx = ParameterContext(params, tsym)
    spec = SpecData(labels, ctx)
    if "name" in header:
        spec.name = header["name"][0]
    if "flavor" in header:
        val, ln, col = header["flavor"]
        if val not in ("general", "alternative", "malcev"):
            raise SpecError("flavor must be general, alternative or malcev", ln, col, source)
        spec.flavor = val
    if "skew_complete" in header:
        val, ln, col = header["skew_complete"]
        spec.skew_complete = _truthy(val, ln, col)
    index = {l: i for i, l in enumerate(labels)}

    def label(name, lineno, line):
        if name not in index:
            raise SpecError("unknown basis label %r" % name, lineno, line_col(line, name), source)
        return index[name]

    for lineno, col0, line in body:
        m = _BILINE.match(line)
        if m:
            kind, a, b, rhs = m.groups()
            if kind not in BILINEAR:
                raise SpecError("unknown bilinear map %r (use %s)" % (kind, ", ".join(BILINEAR)),
                                lineno, col0, source)
            i, j = label(a, lineno, line), label(b, lineno, line)
            table = spec.bilinear.setdefault(kind, {})
            if (i, j) in table:
                raise SpecError("%s(%s, %s) given twice" % (kind, a, b), lineno, col0, source)
            try:
                table[(i, j)] = _parse_vector(rhs, ctx, labels, lineno, col0 + m.start(4))
            except SpecError as e:
                raise SpecError(e.msg, e.line, e.col, source) from None
            spec.lines[(kind, (i, j))] = lineno
            continue
        m = _LINE.match(line)
        if m:
            kind, a, rhs = m.groups()
            if kind not in LINEAR:
                raise SpecError("unknown linear map %r (use %s)" % (kind, ", ".join(LINEAR)),
                                lineno, col0, source)
            j = label(a, lineno, line)
            images = spec.linear.setdefault(kind, {})
            if j in images or kind in spec.identity_maps:
                raise SpecError("%s(%s) given twice" % (kind, a), lineno, col0, source)
            try:
                images[j] = _parse_vector(rhs, ctx, labels, lineno, col0 + m.start(3))
            except SpecError as e:
                raise SpecError(e.msg, e.line, e.col, source) from None
            continue
        m = _IDLINE.match(line)
        if m and m.group(1) in LINEAR:
            if m.group(1) in spec.linear:
                raise SpecError("%s given twice" % m.group(1), lineno, col0, source)
            spec.identity_maps.add(m.group(1))
            continue
        raise SpecError("cannot parse line %r" % line, lineno, col0, source)
    if spec.flavor == "malcev":
        try:
            spec.table()
        except SpecError as e:
            raise SpecError(e.msg, e.line, e.col, source) from None
    return spec


def line_col(line, name):
    return line.find(name) + 1


def load_spec(path):
    with open(path) as fh:
        return parse_spec(fh.read(), str(path))


# ---------------------------------------------------------------------------
# writing

def _vec(v, labels):
    return format_vector(v, labels)


def format_spec(A=None, maps=None, tables=None, name=None, labels=None, ctx=None, flavor=None):
    """Text in the format above; `maps`/`tables` are {kind: object} extras."""
    if A is not None:
        labels, ctx = A.basis_labels, A.ctx
        flavor = flavor or A.flavor_hint
        name = name if name is not None else A.name
    lines = []
    if name:
        lines.append("name: %s" % name)
    lines.append("basis: %s" % " ".join(labels))
    params = [s for s in ctx.symbols if s != ctx.deformation_symbol]
    if params:
        lines.append("params: %s" % " ".join(params))
    if ctx.deformation_symbol:
        lines.append("deformation: %s" % ctx.deformation_symbol)
    if flavor and flavor != "general":
        lines.append("flavor: %s" % flavor)
    tables = dict(tables or {})
    maps = dict(maps or {})
    if A is not None:
        tables.setdefault("mu", A.mu)
        maps.setdefault("alpha", A.alpha)
    dim = len(labels)
    for kind, t in tables.items():
        for i in range(dim):
            for j in range(dim):
                if any(t.c[i][j]):
                    lines.append("%s(%s, %s) = %s" % (kind, labels[i], labels[j], _vec(t.c[i][j], labels)))
    for kind, f in maps.items():
        if f.is_identity():
            lines.append("%s = identity" % kind)
            continue
        for j in range(dim):
            lines.append("%s(%s) = %s" % (kind, labels[j], _vec(f.image(j), labels)))
    return "\n".join(lines) + "\n"

