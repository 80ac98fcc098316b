"""
Looking for loopless graphs with equal U but different Ubar
============================================================

Every labelled connected simple graph up to five vertices, bucketed by U.
The same search runs from the shell as ``gpoly search --enumerate 6 --loopless``.
"""

from gpoly import catalog
from gpoly.search import enumerate_source, run_search

report = run_search(enumerate_source(5), loopless=True)
print(report.to_text())

# with loops admitted, a 3-vertex pair already separates the two invariants
pair = [(g.identifier(), g) for g in (catalog.loop_at_end(), catalog.loop_in_middle())]
print(run_search(pair).to_text())
