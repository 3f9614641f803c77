"""
A one-parameter Hom-Malcev deformation of a 4-dim Malcev algebra.

[x, y]_t = alpha_t [x, y] with alpha_t a polynomial curve of endomorphisms,
then the type-2 derived algebra (alpha_t o [,]_t, alpha_t^2).
"""

from homdef import (check_deformation_equation, check_identity, composition_deformation,
                    deformation_to_algebra, derived_algebra)
from homdef.catalog import load_algebra, load_map

L = load_algebra("catalog:malcev_plain_4dim")
print(L, "\n")
print(check_identity(L, "hom_lie").summary())
print(check_identity(L, "hom_malcev").summary())

D = composition_deformation(L, load_map("catalog:malcev_alpha_t"))
print("\n%s" % D)
print(check_deformation_equation(D, up_to=4).summary())

B = deformation_to_algebra(D)
D2 = derived_algebra(B, 1, 2)
print("\nderived (type 2, n = 1):\n%s" % D2)
print(check_identity(D2, "hom_malcev").summary())
