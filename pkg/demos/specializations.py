"""
Specializations of U
====================

Chromatic symmetric function, stability polynomial and the 2-polymatroid
rank function, each computed directly and by substituting into U.
"""

from gpoly import catalog
from gpoly import invariants as inv

g = catalog.complete(4)
N = 4

X_direct = inv.chromatic_symmetric(g, N)
X_from_u = inv.chromatic_symmetric(g, N, method="from-u")
print("X(K4), N=4    :", X_direct.canonical_string())
print("same from U   :", X_direct == X_from_u)

print("A(K4)         :", inv.stability(g).canonical_string())
print("A from U      :", inv.stability(g, method="from-u").canonical_string())

print("S(K4)         :", inv.two_polymatroid(g).canonical_string())
print("S from U      :", inv.two_polymatroid(g, method="from-u").canonical_string())

# chromatic polynomial from Tutte: note the sign (-1)^r(E)
print("P(K4)         :", inv.chromatic(g).canonical_string())
print("from T        :", inv.chromatic_from_tutte(g).canonical_string())

# Tutte's symmetric function with scalar t, checked against colourings
Y = inv.tutte_symmetric(catalog.triangle(), 3)
ones = {v: 1 for v in Y.variables()}
print("Y(K3; 1,1,1; t=1) =", Y.evaluate(ones), "=", inv.tutte_symmetric_oracle(catalog.triangle(), [1, 1, 1], 1))
