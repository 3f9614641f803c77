"""homdef: command-line front end.  Exit status 0 = pass, 1 = a check failed, 2 = bad input."""

import argparse
import json
import sys
from fractions import Fraction

from . import catalog, cohomology, deform
from .core import AlgebraError, IDENTITIES, check_identity, f_ctx
from .linalg import LinalgError
from .scalars import ScalarError
from .specfile import SpecError, format_spec

OK, FAIL, USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _bindings(pairs):
    out = {}
    for p in pairs or []:
        if "=" not in p:
            raise UsageError("binding %r is not of the form name=value" % p)
        k, v = p.split("=", 1)
        try:
            out[k.strip()] = Fraction(v.strip())
        except (ValueError, ZeroDivisionError):
            raise UsageError("binding %r: %r is not a rational number" % (p, v)) from None
    return out


def _multi_bindings(args, *refs):
    """Bindings shared by several inputs: each name must occur in at least one of them."""
    b = _bindings(args.bind)
    known = set()
    for r in refs:
        if r and not (r.startswith("coboundary:") or r in ("mu", "self")):
            known.update(catalog.load_spec_ref(r).ctx.symbols)
    unknown = sorted(set(b) - known)
    if unknown:
        raise UsageError("unknown parameter(s) %s" % ", ".join(unknown))
    return b


def _emit(args, text, data):
    if args.json:
        print(json.dumps(data, indent=2, sort_keys=True))
    else:
        print(text)


def _report_text(rep, labels=None):
    lines = [rep.summary()]
    for w in rep.witnesses:
        lines.append("  at (%s): %s%s" % (", ".join(str(x) for x in w.where),
                                         "[" + ", ".join(str(x) for x in w.residual) + "]",
                                         ("  " + w.note) if w.note else ""))
    if rep.violations > len(rep.witnesses):
        lines.append("  ... %d more (use --all-witnesses)" % (rep.violations - len(rep.witnesses)))
    for n in rep.notes:
        lines.append("  " + n)
    if rep.domain:
        lines.append("  domain: " + ", ".join(rep.domain))
    return "\n".join(lines)


def _maxw(args):
    return None if getattr(args, "all_witnesses", False) else 16


# ---------------------------------------------------------------------------
# commands

def cmd_check(args):
    A = catalog.load_algebra(args.src, _bindings(args.bind))
    rep = check_identity(A, args.identity, max_witnesses=_maxw(args))
    _emit(args, _report_text(rep), rep.to_dict())
    return OK if rep.passed else FAIL


def _basis_lines(space):
    return ["  [" + ", ".join(str(x) for x in v) + "]" for v in space.vectors]


def cmd_cohomology(args):
    A = catalog.load_algebra(args.src, _bindings(args.bind))
    flavor = args.flavor or ("malcev" if A.flavor_hint == "malcev" else "alternative")
    what = args.what
    if what == "h2":
        family = None
        if args.family:
            spec = catalog.load_spec_ref(args.family)
            fam = spec.table()
            params = [s for s in spec.ctx.symbols if s != spec.ctx.deformation_symbol]
            family = cohomology.family_vectors(fam, params, flavor)
        rep = cohomology.h2_report(A, flavor, family, args.relax_commutant)
        _emit(args, rep.summary(), rep.to_dict())
        return OK if rep.contained else FAIL
    if what == "der":
        space, label = cohomology.derivation_space(A, args.relax_commutant), "Der"
    elif what == "z2":
        space, label = cohomology.two_cocycle_space(A, flavor), "Z²"
    else:
        space, label = cohomology.two_coboundary_space(A, flavor, args.relax_commutant), "B²"
    text = ["dim %s = %d" % (label, space.dim), "flattening: %s" % space.flattening_tag]
    if args.relax_commutant and what != "z2":
        text.append("(C1 relaxed to all linear maps)")
    if args.basis:
        text.extend(_basis_lines(space))
    data = {"what": what, "flavor": flavor, "dim": space.dim, "flattening": space.flattening_tag,
            "relax_commutant": bool(args.relax_commutant),
            "basis": [[str(x) for x in v] for v in space.vectors]}
    _emit(args, "\n".join(text), data)
    return OK


def _algebra_out(args, A, extra=None):
    text = format_spec(A)
    data = {"algebra": text}
    if extra:
        data.update(extra)
    _emit(args, text.rstrip("\n"), data)


def cmd_twist(args):
    b = _multi_bindings(args, args.src, args.endo)
    A = catalog.load_algebra(args.src, b, strict=False)
    extra = {}
    try:
        if args.untwist:
            A, rep = deform.untwist(A)
            extra["alpha_endomorphism_of_result"] = rep.verdict
        if args.endo:
            f = catalog.load_map(args.endo, b, strict=False)
            A = deform.yau_twist(A, f, force=args.force)
        if args.derived is not None:
            A = deform.derived_algebra(A, args.derived, args.type)
    except deform.TwistError as e:
        data = {"refused": str(e)}
        text = "REFUSED: %s" % e
        if e.report is not None:
            data["report"] = e.report.to_dict()
            text += "\n" + _report_text(e.report)
        _emit(args, text, data)
        return FAIL
    _algebra_out(args, A, extra)
    if extra and not args.json:
        print("# twist is an endomorphism of the untwisted algebra: %s" % extra["alpha_endomorphism_of_result"])
    return OK


def cmd_deform(args):
    b = _multi_bindings(args, args.src, args.endo_family)
    A = catalog.load_algebra(args.src, b, strict=False)
    f = catalog.load_map(args.endo_family, b, strict=False)
    try:
        D = deform.composition_deformation(A, f)
    except deform.TwistError as e:
        data = {"refused": str(e), "report": e.report.to_dict() if e.report else None}
        _emit(args, "REFUSED: %s\n%s" % (e, _report_text(e.report) if e.report else ""), data)
        return FAIL
    text = "flavor: %s\n%s" % (D.flavor, D)
    data = {"flavor": D.flavor, "algebra": format_spec(deform.deformation_to_algebra(D)),
            "degrees": D.degrees()}
    status = OK
    if args.verify_to is not None:
        rep = deform.check_deformation_equation(D, args.verify_to, _maxw(args))
        text += "\n" + _report_text(rep)
        data["verification"] = rep.to_dict()
        status = OK if rep.passed else FAIL
    _emit(args, text, data)
    return status


def cmd_equiv(args):
    b = _multi_bindings(args, args.defsrc, args.rho)
    A = catalog.load_algebra(args.defsrc, b, strict=False)
    rho_map = catalog.load_map(args.rho, b, strict=False)
    ctx = A.ctx.union(f_ctx(rho_map))
    if ctx.deformation_symbol is None:
        raise UsageError("%s declares no deformation symbol" % args.defsrc)
    D = deform.algebra_to_deformation(A.lift(ctx))
    rho = deform.FormalAutomorphism.from_map(rho_map.lift(ctx), D.symbol)
    D2 = deform.apply_equivalence(D, rho, args.order)
    B = deform.deformation_to_algebra(D2)
    text = "# equivalent deformation mod %s^%d\n%s" % (D.symbol, args.order + 1, format_spec(B).rstrip("\n"))
    data = {"order": args.order, "algebra": format_spec(B)}
    status = OK
    if args.verify:
        rep = deform.check_deformation_equation(D2, args.order)
        text += "\n" + _report_text(rep)
        data["verification"] = rep.to_dict()
        status = OK if rep.passed else FAIL
    _emit(args, text, data)
    return status


def cmd_verify(args):
    target_ref = args.claim.split(":", 1)[1] if args.claim.startswith("coboundary:") else None
    b = _multi_bindings(args, args.src, args.cochain, target_ref)
    A = catalog.load_algebra(args.src, b, strict=False)
    claim, target = args.claim, None
    if claim.startswith("coboundary:"):
        ref = claim.split(":", 1)[1]
        claim = "coboundary"
        target = A.mu if ref in ("mu", "self") else catalog.load_table(ref, b, strict=False)
    elif claim not in ("derivation", "cocycle"):
        raise UsageError("claim must be derivation, cocycle or coboundary:<target>")
    if claim == "cocycle":
        cochain = catalog.load_table(args.cochain, b, strict=False)
    else:
        cochain = catalog.load_map(args.cochain, b, strict=False)
    rep = cohomology.verify_cochain(A, cochain, claim, target=target, flavor=args.flavor,
                                    max_witnesses=_maxw(args))
    _emit(args, _report_text(rep), rep.to_dict())
    return OK if rep.passed else FAIL


def cmd_catalog(args):
    if args.action in (None, "list"):
        rows = [(n, catalog.entry(n).kind, catalog.entry(n).doc) for n in catalog.names()]
        text = "\n".join("%-26s %-8s %s" % r for r in rows)
        _emit(args, text, [{"name": n, "kind": k, "doc": d} for n, k, d in rows])
        return OK
    if args.action == "show":
        if not args.name:
            raise UsageError("catalog show needs a NAME")
        e = catalog.entry(args.name)
        text = "# %s (%s)\n# %s\n# documented check: %s\n%s" % (
            e.name, e.kind, e.doc, " ".join(e.check), e.text.rstrip("\n"))
        _emit(args, text, {"name": e.name, "kind": e.kind, "doc": e.doc, "check": list(e.check),
                           "text": e.text})
        return OK
    raise UsageError("unknown catalog action %r" % args.action)


# ---------------------------------------------------------------------------

def build_parser():
    p = argparse.ArgumentParser(prog="homdef", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, bind=True):
        sp.add_argument("--json", action="store_true", help="machine-readable report")
        if bind:
            sp.add_argument("--bind", action="append", metavar="NAME=VALUE",
                            help="specialize a parameter (repeatable)")
        return sp

    sp = common(sub.add_parser("check", help="verify a Hom-identity"))
    sp.add_argument("src")
    sp.add_argument("--identity", required=True, choices=IDENTITIES)
    sp.add_argument("--all-witnesses", action="store_true")
    sp.set_defaults(fn=cmd_check)

    sp = common(sub.add_parser("cohomology", help="derivations, Z2, B2, H2 of a numeric algebra"))
    sp.add_argument("src")
    sp.add_argument("--what", required=True, choices=("der", "z2", "b2", "h2"))
    sp.add_argument("--flavor", choices=cohomology.FLAVORS)
    sp.add_argument("--relax-commutant", action="store_true",
                    help="take C1 = all linear maps instead of the alpha-commutant")
    sp.add_argument("--basis", action="store_true", help="print basis vectors")
    sp.add_argument("--family", help="2-cochain family (linear in its params) to test for membership")
    sp.set_defaults(fn=cmd_cohomology)

    sp = common(sub.add_parser("twist", help="Yau twist, untwist, derived algebras"))
    sp.add_argument("src")
    sp.add_argument("--endo", help="endomorphism to twist by")
    sp.add_argument("--force", action="store_true", help="allow twisting an algebra with nontrivial twist")
    sp.add_argument("--untwist", action="store_true", help="replace mu by alpha^-1 o mu first")
    sp.add_argument("--derived", type=int, metavar="N")
    sp.add_argument("--type", type=int, choices=(1, 2), default=1)
    sp.set_defaults(fn=cmd_twist)

    sp = common(sub.add_parser("deform", help="deformation by composition with an endomorphism family"))
    sp.add_argument("src")
    sp.add_argument("--endo-family", required=True)
    sp.add_argument("--verify-to", type=int, metavar="N")
    sp.add_argument("--all-witnesses", action="store_true")
    sp.set_defaults(fn=cmd_deform)

    sp = common(sub.add_parser("equiv", help="transport a deformation along rho_t = id + t rho_1 + ..."))
    sp.add_argument("defsrc")
    sp.add_argument("--rho", required=True)
    sp.add_argument("--order", type=int, required=True)
    sp.add_argument("--verify", action="store_true", help="check the deformation equation of the result")
    sp.set_defaults(fn=cmd_equiv)

    sp = common(sub.add_parser("verify", help="check a parametric cochain family symbolically"))
    sp.add_argument("src")
    sp.add_argument("--cochain", required=True)
    sp.add_argument("--claim", required=True, help="derivation | cocycle | coboundary:<target|mu>")
    sp.add_argument("--flavor", choices=cohomology.FLAVORS)
    sp.add_argument("--all-witnesses", action="store_true")
    sp.set_defaults(fn=cmd_verify)

    sp = common(sub.add_parser("catalog", help="list or show catalog entries"), bind=False)
    sp.add_argument("action", nargs="?", choices=("list", "show"))
    sp.add_argument("name", nargs="?")
    sp.set_defaults(fn=cmd_catalog)
    return p


def run_command(argv):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return USAGE if e.code else OK
    try:
        return args.fn(args)
    except (UsageError, SpecError, ScalarError, catalog.CatalogError, AlgebraError, LinalgError,
            ValueError) as e:
        print("homdef: error: %s" % e, file=sys.stderr)
        return USAGE


def main(argv=None):
    sys.exit(run_command(sys.argv[1:] if argv is None else argv))


if __name__ == "__main__":
    main()
