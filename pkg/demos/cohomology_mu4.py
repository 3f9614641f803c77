"""
Derivations and second cohomology of the two 4-dim alternative algebras.

B^2 is the image of delta^1 on the maps commuting with the twist; here the
twist is the identity so every map counts, and dim B^2 = 16 - dim Der.
"""

from homdef import derivation_space, family_vectors, h2_report
from homdef.catalog import CATALOG, load_algebra, load_table

for k in ("mu41", "mu42"):
    A = load_algebra("catalog:" + k)
    print("%s: dim Der = %d" % (k, derivation_space(A).dim))
    fam = load_table("catalog:%s_cocycles" % k)
    params = CATALOG["%s_cocycles" % k].spec().ctx.symbols
    rep = h2_report(A, family=family_vectors(fam, params))
    print(rep.summary())
    print()
