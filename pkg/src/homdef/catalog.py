"""
Named algebras, maps and cochain families, stored as spec-file text.

Each entry carries a documented check: the property its source claims for it.
`run_documented_check` evaluates that claim exactly; it does not assume it.
"""

import os
from dataclasses import dataclass

from . import cohomology
from .core import check_endomorphism, check_identity
from .specfile import SpecError, load_spec, parse_spec


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    kind: str          # algebra | map | cochain
    text: str
    doc: str
    check: tuple       # ("identity", which) | ("endomorphism", algebra) | ("derivation", algebra)
                       # | ("cocycle", algebra) | ("coboundary", algebra)

    def spec(self):
        return parse_spec(self.text, "catalog:" + self.name)


def _octonions():
    triples = [(1, 2, 3), (1, 4, 5), (1, 7, 6), (2, 4, 6), (2, 5, 7), (3, 4, 7), (3, 6, 5)]
    lines = ["name: octonions", "basis: " + " ".join("e%d" % i for i in range(8)), "mu(e0, e0) = e0"]
    for i in range(1, 8):
        lines.append("mu(e0, e%d) = e%d" % (i, i))
        lines.append("mu(e%d, e0) = e%d" % (i, i))
        lines.append("mu(e%d, e%d) = -e0" % (i, i))
    prods = {}
    for a, b, c in triples:
        for x, y, z in ((a, b, c), (b, c, a), (c, a, b)):
            prods[(x, y)] = "e%d" % z
            prods[(y, x)] = "-e%d" % z
    for (x, y) in sorted(prods):
        lines.append("mu(e%d, e%d) = %s" % (x, y, prods[(x, y)]))
    return "\n".join(lines) + "\n"


_MU41 = """\
basis: e0 e1 e2 e3
mu(e0, e0) = e0
mu(e0, e1) = e1
mu(e2, e0) = e2
mu(e2, e3) = e1
mu(e3, e0) = e3
mu(e3, e2) = -e1
"""

_MU42 = """\
basis: e0 e1 e2 e3
mu(e0, e0) = e0
mu(e0, e2) = e2
mu(e0, e3) = e3
mu(e1, e0) = e1
mu(e2, e3) = e1
mu(e3, e2) = -e1
"""

_K = "(-a4*a5 + a6 + a7 + a6*a7)"
_P = "(a3 - a2*a5 + a3*a6)"
_Q = "(-a2 + a3*a4 - a2*a7)"


def _endo(sign):
    s = "" if sign > 0 else "-"
    return """\
basis: e0 e1 e2 e3
params: a1 a2 a3 a4 a5 a6 a7
deformation: t
map(e0) = e0 + t*(a1*e1 + a2*e2 + a3*e3)
map(e1) = e1 + t*{K}*e1
map(e2) = e2 + t*({s}{P}*e1 + a6*e2 + a5*e3)
map(e3) = e3 + t*({s}{Q}*e1 + a4*e2 + a7*e3)
""".format(K=_K, P=_P, Q=_Q, s=s)


def _tilde41():
    return """\
basis: e0 e1 e2 e3
params: a1 a2 a3 a4 a5 a6 a7
deformation: t
mu(e0, e0) = e0 + t*(a1*e1 + a2*e2 + a3*e3)
mu(e0, e1) = e1 + t*{K}*e1
mu(e2, e0) = e2 + t*({P}*e1 + a6*e2 + a5*e3)
mu(e2, e3) = e1 + t*{K}*e1
mu(e3, e0) = e3 + t*({Q}*e1 + a4*e2 + a7*e3)
mu(e3, e2) = -e1 - t*{K}*e1
""".format(K=_K, P=_P, Q=_Q) + "\n".join(_endo(1).splitlines()[3:]).replace("map(", "alpha(") + "\n"


def _tilde42():
    return """\
basis: e0 e1 e2 e3
params: a1 a2 a3 a4 a5 a6 a7
deformation: t
mu(e0, e0) = e0 + t*(a1*e1 + a2*e2 + a3*e3)
mu(e0, e2) = e2 + t*(-{P}*e1 + a6*e2 + a5*e3)
mu(e0, e3) = e3 + t*(-{Q}*e1 + a4*e2 + a7*e3)
mu(e1, e0) = e1 + t*{K}*e1
mu(e2, e3) = e1 + t*{K}*e1
mu(e3, e2) = -e1 - t*{K}*e1
""".format(K=_K, P=_P, Q=_Q) + "\n".join(_endo(-1).splitlines()[3:]).replace("map(", "alpha(") + "\n"


_HOM4 = """\
basis: e0 e1 e2 e3
params: a1 a2 a3 a4
deformation: t
mu(e0, e0) = e0 + t*a1*e1
mu(e0, e1) = e1 + t*(-a2*a3 + a4)*e1
mu(e2, e0) = e2 + t*a4*e2 + t*a3*e3
mu(e2, e3) = e1 + t*(-a2*a3 + a4)*e1
mu(e3, e0) = e3 + t*a2*e2
mu(e3, e2) = -e1 - t*(-a2*a3 + a4)*e1
alpha(e0) = e0 + t*a1*e1
alpha(e1) = e1 + t*(-a2*a3 + a4)*e1
alpha(e2) = e2 + t*a4*e2 + t*a3*e3
alpha(e3) = e3 + t*a2*e2
"""

_HOM4_DER = """\
basis: e0 e1 e2 e3
params: a1 a2 a3 a4 b1 b2
deformation: t
f(e0) = b1*e1
f(e1) = -b1*((a2*a3 - a4)/a1)*e1
f(e2) = -(b1*a2*a3 - b1*a4 + b2*a1)/a1*e2 - a3*(b1*a2*a3 - b1*a4 + 2*b2*a1)/(a1*a4)*e3
f(e3) = -a2*(b1*a2*a3 - b1*a4 + 2*b2*a1)/(a1*a4)*e2 + b2*e3
"""

_HOM4_G = """\
basis: e0 e1 e2 e3
params: nu1 nu2 nu3 nu4 nu5 nu6 nu7 nu8
g(e0) = e0
g(e1) = nu1*e0 + (nu2 + nu3 - 1)*e1 + nu4*e2 - nu5*e3
g(e2) = nu5*e0 + nu2*e2 + nu6*e3
g(e3) = nu4*e0 + nu7*e2 + nu8*e3
"""

_DER4 = """\
basis: e0 e1 e2 e3
params: b1 b2 b3 b4 b5 b6 b7
f(e0) = b1*e1 + b2*e2 + b3*e3
f(e1) = (b4 + b5)*e1
f(e2) = b3*e1 + b4*e2 + b6*e3
f(e3) = -b2*e1 + b7*e2 + b5*e3
"""

_COC41 = """\
basis: e0 e1 e2 e3
params: l1 l2 l3 l4 l5 l6 l7 l8 l9 l10
phi(e0, e0) = l1*e0
phi(e0, e1) = l1*e1 + l2*e2 + l3*e3
phi(e0, e2) = l4*e0 - l5*e1
phi(e0, e3) = l6*e0 - l7*e1
phi(e1, e0) = l8*e0 - l2*e2 - l3*e3
phi(e1, e1) = l8*e1
phi(e1, e2) = l3*e1
phi(e1, e3) = -l2*e1
phi(e2, e0) = l9*e1 + l1*e2
phi(e2, e1) = (l4 - l3)*e1 + l8*e2
phi(e2, e2) = l4*e2
phi(e2, e3) = -l8*e0 - l10*e1 + (l2 + l6)*e2 + l3*e3
phi(e3, e0) = l7*e1 + l1*e3
phi(e3, e1) = (l2 + l6)*e1 + l8*e3
phi(e3, e2) = l8*e0 + l10*e1 - l2*e2 + (l4 - l3)*e3
phi(e3, e3) = l6*e3
"""

_COC42 = """\
basis: e0 e1 e2 e3
params: l1 l2 l3 l4 l5 l6 l7 l8 l9 l10 l11
phi(e0, e0) = l1*e0
phi(e0, e1) = l2*e0 + l3*e2 + l4*e3
phi(e0, e2) = -l5*e1 - l1*e2
phi(e0, e3) = l6*e1 - l1*e3
phi(e1, e0) = l1*e1 - l3*e2 - l4*e3
phi(e1, e1) = l2*e1
phi(e1, e2) = (l7 - l8)*e1 + l2*e2
phi(e1, e3) = (l9 + l10)*e1 + l2*e3
phi(e2, e0) = l7*e0 + l5*e1
phi(e2, e1) = l8*e1
phi(e2, e2) = l7*e2
phi(e2, e3) = -l2*e0 + l11*e1 - l3*e2 + (l7 - l8)*e3
phi(e3, e0) = l9*e0 - l6*e1
phi(e3, e1) = -l10*e1
phi(e3, e2) = l2*e0 - l11*e1 + (l9 + l10)*e2 + l8*e3
phi(e3, e3) = l9*e3
"""

_MALCEV_PLAIN = """\
basis: e0 e1 e2 e3
flavor: malcev
skew_complete: true
bracket(e0, e1) = -e1
bracket(e0, e2) = -e2
bracket(e0, e3) = e3
bracket(e1, e2) = 2*e3
"""

_MALCEV_ALPHA_T = """\
basis: e0 e1 e2 e3
deformation: t
map(e0) = e0 + t*(e2 + e3)
map(e1) = e1 + t*(e1 + e2 + e3) + t^2*e3
map(e2) = e2 + t*e2
map(e3) = e3 + 2*t*e3 + t^2*e3
"""

_MALCEV_T = """\
basis: e0 e1 e2 e3
deformation: t
flavor: malcev
skew_complete: true
bracket(e0, e1) = -e1 - t*(e1 + e2 + e3) - t^2*e3
bracket(e0, e2) = -e2 - t*e2
bracket(e0, e3) = e3 + 2*t*e3 + t^2*e3
bracket(e1, e2) = 2*e3 + 4*t*e3 + 2*t^2*e3
alpha(e0) = e0 + t*(e2 + e3)
alpha(e1) = e1 + t*(e1 + e2 + e3) + t^2*e3
alpha(e2) = e2 + t*e2
alpha(e3) = e3 + 2*t*e3 + t^2*e3
"""

_MALCEV_T2 = """\
basis: e0 e1 e2 e3
deformation: t
flavor: malcev
skew_complete: true
bracket(e0, e1) = -e1 - 2*t*(e1 + e2 + e3) - t^2*(e1 + 2*e2 + 5*e3) - 4*t^3*e3 - t^4*e3
bracket(e0, e2) = -e2 - 2*t*e2 - t^2*e2
bracket(e0, e3) = e3 + 4*t*e3 + 6*t^2*e3 + 4*t^3*e3 + t^4*e3
bracket(e1, e2) = 2*e3 + 8*t*e3 + 12*t^2*e3 + 8*t^3*e3 + 2*t^4*e3
alpha(e0) = e0 + t*(2*e2 + 2*e3) + t^2*(e2 + 2*e3) + t^3*e3
alpha(e1) = e1 + 2*t*(e1 + e2 + e3) + t^2*(e1 + 2*e2 + 5*e3) + 4*t^3*e3 + t^4*e3
alpha(e2) = e2 + 2*t*e2 + t^2*e2
alpha(e3) = e3 + 4*t*e3 + 6*t^2*e3 + 4*t^3*e3 + t^4*e3
"""

_ENTRIES = [
    CatalogEntry("ex_1_4", "algebra", """\
basis: e1 e2 e3
params: a b
mu(e1, e1) = a*e1
mu(e1, e2) = a*e2
mu(e2, e1) = a*e2
mu(e1, e3) = b*e3
mu(e3, e1) = b*e3
mu(e2, e2) = a*e2
mu(e2, e3) = b*e3
alpha(e1) = a*e1
alpha(e2) = a*e2
alpha(e3) = b*e3
""", "3-dim Hom-associative family in a, b; neither associative nor left alternative when a != b, b != 0",
        ("identity", "hom_assoc")),
    CatalogEntry("ex_1_5", "algebra", """\
basis: e0 e1 e2 e3
mu(e0, e0) = e0 + e2
mu(e2, e0) = 2*e2
mu(e3, e0) = e2
alpha(e0) = e0 + e2
alpha(e1) = 0
alpha(e2) = 2*e2
alpha(e3) = e2
""", "4-dim left Hom-alternative algebra whose twist is singular", ("identity", "left_alt")),
    CatalogEntry("ex_malcev_4dim", "algebra", """\
basis: e0 e1 e2 e3
params: b1 b2 a2 a3 c
flavor: malcev
skew_complete: true
bracket(e0, e1) = -(b1*e1 + b2*e2 + a2*b1*e3)
bracket(e0, e2) = -c*e2
bracket(e0, e3) = b1*c*e3
bracket(e1, e2) = 2*b1*c*e3
alpha(e0) = e0 + a2*e2 + a3*e3
alpha(e1) = b1*e1 + b2*e2 + a2*b1*e3
alpha(e2) = c*e2
alpha(e3) = b1*c*e3
""", "4-dim Hom-Malcev family in b1, b2, a2, a3, c (Yau twist of malcev_plain_4dim)",
        ("identity", "hom_malcev")),
    CatalogEntry("mu41", "algebra", "name: mu41\n" + _MU41,
                 "4-dim alternative, not associative (first of two)", ("identity", "alternative")),
    CatalogEntry("mu42", "algebra", "name: mu42\n" + _MU42,
                 "4-dim alternative, not associative (second of two, opposite of mu41 up to isomorphism)",
                 ("identity", "alternative")),
    CatalogEntry("octonions", "algebra", _octonions(),
                 "real octonions, Fano triples (1,2,3),(1,4,5),(1,7,6),(2,4,6),(2,5,7),(3,4,7),(3,6,5); "
                 "e0 the unit", ("identity", "alternative")),
    CatalogEntry("endo_mu41", "map", _endo(1),
                 "published family id + t*alpha1 of endomorphisms of mu41 in a1..a7",
                 ("endomorphism", "mu41")),
    CatalogEntry("endo_mu42", "map", _endo(-1),
                 "published family id + t*alpha1 of endomorphisms of mu42 in a1..a7",
                 ("endomorphism", "mu42")),
    CatalogEntry("mu41_tilde", "algebra", _tilde41(),
                 "published Hom-alternative family (endo_mu41 o mu41, endo_mu41)", ("identity", "left_alt")),
    CatalogEntry("mu42_tilde", "algebra", _tilde42(),
                 "published Hom-alternative family (endo_mu42 o mu42, endo_mu42)", ("identity", "left_alt")),
    CatalogEntry("hom_family_4", "algebra", _HOM4,
                 "4-dim Hom-alternative family in a1..a4, t, not alternative", ("identity", "left_alt")),
    CatalogEntry("hom_family_4_derivations", "map", _HOM4_DER,
                 "derivations of hom_family_4 (free b1, b2; needs a1, a4 != 0)",
                 ("derivation", "hom_family_4")),
    CatalogEntry("hom_family_4_g", "map", _HOM4_G,
                 "claimed witness g with delta1 g = mu for hom_family_4", ("coboundary", "hom_family_4")),
    CatalogEntry("mu41_derivations", "map", _DER4, "derivations of mu41 (b1..b7)", ("derivation", "mu41")),
    CatalogEntry("mu42_derivations", "map", _DER4, "derivations of mu42 (b1..b7)", ("derivation", "mu42")),
    CatalogEntry("mu41_cocycles", "cochain", _COC41, "2-cocycles of mu41 (l1..l10)", ("cocycle", "mu41")),
    CatalogEntry("mu42_cocycles", "cochain", _COC42, "2-cocycles of mu42 (l1..l11)", ("cocycle", "mu42")),
    CatalogEntry("malcev_plain_4dim", "algebra", _MALCEV_PLAIN,
                 "4-dim Malcev algebra, not Lie", ("identity", "hom_malcev")),
    CatalogEntry("malcev_alpha_t", "map", _MALCEV_ALPHA_T,
                 "endomorphisms of malcev_plain_4dim deforming the identity", ("endomorphism", "malcev_plain_4dim")),
    CatalogEntry("malcev_t", "algebra", _MALCEV_T,
                 "published deformation malcev_alpha_t o [,] of malcev_plain_4dim", ("identity", "hom_malcev")),
    CatalogEntry("malcev_t_derived", "algebra", _MALCEV_T2,
                 "published type-2 derived algebra of malcev_t", ("identity", "hom_malcev")),
]

CATALOG = {e.name: e for e in _ENTRIES}
PREFIX = "catalog:"


class CatalogError(KeyError):
    def __str__(self):
        return self.args[0] if self.args else "catalog error"


def entry(name):
    if name.startswith(PREFIX):
        name = name[len(PREFIX):]
    try:
        return CATALOG[name]
    except KeyError:
        raise CatalogError("no catalog entry %r (try `homdef catalog list`)" % name) from None


def names():
    return list(CATALOG)


def load_spec_ref(ref):
    """Catalog reference ("catalog:NAME") or file path -> SpecData."""
    if ref.startswith(PREFIX):
        return entry(ref).spec()
    if not os.path.exists(ref):
        raise SpecError("no such file %r" % ref)
    return load_spec(ref)


def _bind(obj, spec, bindings, strict=True):
    """Substitute; with strict=False names the object does not use are ignored."""
    if not bindings:
        return obj
    unknown = [k for k in bindings if k not in spec.ctx.symbols]
    if unknown and strict:
        raise SpecError("unknown parameter(s) %s" % ", ".join(unknown))
    bindings = {k: v for k, v in bindings.items() if k in spec.ctx.symbols}
    if not bindings:
        return obj
    return obj.substitute(bindings) if hasattr(obj, "substitute") else obj.map(lambda x: x.substitute(bindings))


def load_algebra(ref, bindings=None, strict=True):
    spec = load_spec_ref(ref)
    A = spec.algebra()
    if not A.name and ref.startswith(PREFIX):
        A = A.replace(name=ref[len(PREFIX):])
    return _bind(A, spec, bindings, strict)


def load_map(ref, bindings=None, kinds=None, strict=True):
    spec = load_spec_ref(ref)
    f = spec.map(kinds) if kinds else spec.map()
    return _bind(f, spec, bindings, strict)


def load_table(ref, bindings=None, strict=True):
    spec = load_spec_ref(ref)
    return _bind(spec.table(), spec, bindings, strict)


def run_documented_check(name, bindings=None):
    e = entry(name)
    what = e.check[0]
    if what == "identity":
        return check_identity(load_algebra(PREFIX + e.name, bindings), e.check[1])
    A = load_algebra(PREFIX + e.check[1])
    if what == "endomorphism":
        return check_endomorphism(A, load_map(PREFIX + e.name, bindings))
    if what == "derivation":
        return cohomology.verify_cochain(A, load_map(PREFIX + e.name, bindings), "derivation")
    if what == "coboundary":
        return cohomology.verify_cochain(A, load_map(PREFIX + e.name, bindings), "coboundary", target=A.mu)
    if what == "cocycle":
        return cohomology.verify_cochain(A, load_table(PREFIX + e.name, bindings), "cocycle")
    raise ValueError(what)
