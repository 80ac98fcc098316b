"""
An 11-vertex pair with equal polychromate
=========================================

Two non-isomorphic graphs on 11 vertices and 18 edges.  They share the
polychromate, the extended polychromate and Ubar.  Runs in about 15 seconds.
"""

import time

import networkx as nx

from gpoly import catalog
from gpoly import invariants as inv

g1, g2 = catalog.brylawski_pair()

h1, h2 = nx.Graph(list(g1.edges)), nx.Graph(list(g2.edges))
print("isomorphic:", nx.is_isomorphic(h1, h2))

for name, fn in (("polychromate", inv.polychromate),
                 ("ext-polychromate", inv.extended_polychromate),
                 ("ubar", inv.ubar)):
    start = time.perf_counter()
    same = fn(g1) == fn(g2)
    print(f"{name:17s} equal: {same}   ({time.perf_counter() - start:.1f} s)")

print("Ubar has", len(inv.ubar(g1)), "terms")
