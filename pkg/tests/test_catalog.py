"""Each catalog entry carries the property its source claims; these tests assert the claim.

Entries whose claim is false (see the decisions ledger) fail here on purpose.
"""

import pytest

from homdef.catalog import CATALOG, CatalogError, entry, load_algebra, names, run_documented_check


@pytest.mark.parametrize("name", names())
def test_documented_check(name):
    rep = run_documented_check(name)
    assert rep.passed, "%s: %s\n%s" % (name, rep.summary(), "\n".join(
        "  %s -> %s" % (w.where, [str(x) for x in w.residual]) for w in rep.witnesses[:4]))


def test_every_entry_parses():
    for name, e in CATALOG.items():
        s = e.spec()
        assert s.dim == (8 if name == "octonions" else 3 if name == "ex_1_4" else 4)


def test_lookup():
    assert entry("catalog:mu41") is entry("mu41")
    with pytest.raises(CatalogError):
        entry("mu43")
    A = load_algebra("catalog:ex_1_4", {"a": 2})
    assert A.ctx.symbols == ("b",)


def test_published_families_hold_at_t_equal_one():
    """The endomorphism-family claims are true at t = 1, which is what the twists use."""
    bind = {"t": 1}
    for name in ("endo_mu41", "endo_mu42", "mu41_tilde", "mu42_tilde", "hom_family_4"):
        assert run_documented_check(name, bind).passed, name
