"""
Deletion-contraction with vertex weights
========================================

W-bar of a weighted multigraph satisfies W(G) = W(G - e) + W(G / e) for a
non-loop edge e, with a closed form once only loops remain.  Contraction adds
the endpoint weights.
"""

from gpoly import catalog
from gpoly import invariants as inv
from gpoly.multigraph import Multigraph, contract_edge, delete_edge

# two parallel edges between 0 and 1, and a loop on 0
F = catalog.double_edge_with_loop()
print("F          =", F.edges)
print("F - e0     =", delete_edge(F, 0).edges)
print("F / e0     =", contract_edge(F, 0).edges, "weights", contract_edge(F, 0).weights)

print("recurrence =", inv.wbar_recurrence(F).canonical_string())
print("expansion  =", inv.wbar_expansion(F).canonical_string())

# a single vertex of weight 2 carrying two loops
B = Multigraph(1, ((0, 0), (0, 0)), (2,))
print("base case  =", inv.wbar_recurrence(B).canonical_string())

# the (1, 2, 3)-weighted triangle
T = catalog.triangle().with_weights((1, 2, 3))
print("W(K3;1,2,3)=", inv.wbar_expansion(T).canonical_string())

# Tutte's V-function follows from the same recurrence, or by substitution
print("V(F)       =", inv.v_function(F).canonical_string())
assert inv.v_function(F) == inv.v_function(F, method="from-ubar")
