"""Exhaustive generators for the small-graph suites."""

from __future__ import annotations

from itertools import combinations, combinations_with_replacement, product
from typing import Iterator

from .multigraph import Multigraph, component_count


def connected_simple_graphs(max_n: int, min_n: int = 1) -> Iterator[Multigraph]:
    """Every labelled connected simple graph with ``min_n..max_n`` vertices.

    Isomorphic copies are all emitted; within each ``n`` the order follows
    the edge bitmask over pairs ``(i, j)``, ``i < j``, in graph6 order.
    """
    for n in range(min_n, max_n + 1):
        pairs = [(i, j) for j in range(1, n) for i in range(j)]
        for mask in range(1 << len(pairs)):
            edges = tuple(p for b, p in enumerate(pairs) if mask >> b & 1)
            if len(edges) < n - 1:
                continue
            g = Multigraph(n, edges)
            if component_count(g) == 1:
                yield g


def small_multigraphs(max_vertices: int, max_edges: int, *, loops: bool = True, min_vertices: int = 1) -> Iterator[Multigraph]:
    """Every multiset of at most ``max_edges`` edges on ``1..max_vertices``
    labelled vertices, loops and parallel edges included."""
    for n in range(min_vertices, max_vertices + 1):
        kinds = [(i, j) for i in range(n) for j in range(i, n) if loops or i != j]
        for k in range(max_edges + 1):
            for edges in combinations_with_replacement(kinds, k):
                yield Multigraph(n, edges)


def weightings(n: int, values=(1, 2)) -> Iterator[tuple[int, ...]]:
    yield from product(values, repeat=n)


def simple_graphs(n: int) -> Iterator[Multigraph]:
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield Multigraph(n, tuple(p for b, p in enumerate(pairs) if mask >> b & 1))
