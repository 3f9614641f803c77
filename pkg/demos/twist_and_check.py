"""
Twisting an alternative algebra into a Hom-alternative one.

mu41 is alternative but not associative.  Twisting it along an endomorphism
gives a multiplicative Hom-alternative algebra; its commutator is Hom-Malcev.
"""

from homdef import check_identity, commutator_algebra, derived_algebra, yau_twist
from homdef.catalog import load_algebra, load_map

A = load_algebra("catalog:mu41")
print(A)
for w in ("alternative", "hom_assoc"):
    print(check_identity(A, w).summary())

# the printed family is an endomorphism only at t = 1
f = load_map("catalog:endo_mu41", {"a1": 0, "a2": 0, "a3": 0, "a4": 0, "a5": 0, "a6": 1, "a7": 1, "t": 1})
B = yau_twist(A, f)
print("\ntwisted:\n%s" % B)
for w in ("left_alt", "right_alt", "multiplicative", "hom_assoc"):
    print(check_identity(B, w).summary())

C = commutator_algebra(B)
print("\ncommutator:", check_identity(C, "hom_malcev").summary())
print("second derived, type 2:", check_identity(derived_algebra(B, 2, 2), "alternative").summary())
