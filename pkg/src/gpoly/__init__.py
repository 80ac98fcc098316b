"""Exact computation of U, Ū, W̄, the polychromates and the Tutte symmetric
functions, with executable conversions between them."""

from .multigraph import Multigraph, parse_edge_list, parse_graph6, to_graph6
from .polyring import Poly

__all__ = ["Multigraph", "Poly", "parse_edge_list", "parse_graph6", "to_graph6"]
__version__ = "0.1.0"
