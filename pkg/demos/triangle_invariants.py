"""
Invariants of the triangle
==========================

Every polynomial below comes from one pass over the 8 edge subsets of K3
(or the 5 vertex partitions for the partition sums).
"""

from gpoly import catalog
from gpoly import invariants as inv

K3 = catalog.triangle()

# U keeps only component sizes and the total nullity (in y)
print("U    =", inv.u_poly(K3).canonical_string())

# the extended version records (size, nullity) per component: z[size, nullity]
print("Ubar =", inv.ubar(K3).canonical_string())

# Tutte and chromatic polynomials, both by subset expansion
print("T    =", inv.tutte(K3).canonical_string())
print("P    =", inv.chromatic(K3).canonical_string())

# same T, recovered from U by substitution and exact division
assert inv.tutte(K3, method="from-u") == inv.tutte(K3)

# partition sums: x2[size, internal edges] per block
print("chi  =", inv.polychromate(K3).canonical_string())
print("chib =", inv.extended_polychromate(K3).canonical_string())
