"""
Two loop placements on a path
=============================

A path 0 - 1 - 2 with a loop at an end vertex, and the same path with the loop
in the middle.  U cannot tell them apart; the extended polynomial can.
"""

from gpoly import catalog
from gpoly import invariants as inv

G1 = catalog.loop_at_end()
G2 = catalog.loop_in_middle()

for name, g in (("G1", G1), ("G2", G2)):
    print(name, "U    =", inv.u_poly(g).canonical_string())
    print(name, "Ubar =", inv.ubar(g).canonical_string())

print("U equal:   ", inv.u_poly(G1) == inv.u_poly(G2))
print("Ubar equal:", inv.ubar(G1) == inv.ubar(G2))

# the difference sits in the subsets that keep the loop but drop an edge:
# a (2 vertex, 1 cycle) component appears once in G1 and twice in G2
diff = inv.ubar(G2) - inv.ubar(G1)
print("G2 - G1    =", diff.canonical_string())
