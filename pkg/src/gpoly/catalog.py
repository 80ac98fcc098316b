"""Named small graphs used in examples and golden tests."""

from __future__ import annotations

from .multigraph import Multigraph


def triangle() -> Multigraph:
    return Multigraph(3, ((0, 1), (1, 2), (2, 0)))


def path2() -> Multigraph:
    """Path with two edges, 0 - 1 - 2."""
    return Multigraph(3, ((0, 1), (1, 2)))


def loop_at_end() -> Multigraph:
    """Path of length two with a loop at an end vertex."""
    return Multigraph(3, ((0, 1), (1, 2), (0, 0)))


def loop_in_middle() -> Multigraph:
    """Path of length two with a loop at the middle vertex."""
    return Multigraph(3, ((0, 1), (1, 2), (1, 1)))


def double_edge_with_loop() -> Multigraph:
    """Two vertices joined by two parallel edges, plus a loop on the first."""
    return Multigraph(2, ((0, 1), (0, 1), (0, 0)))


def single_loop() -> Multigraph:
    return Multigraph(1, ((0, 0),))


def complete(n: int) -> Multigraph:
    return Multigraph(n, tuple((i, j) for i in range(n) for j in range(i + 1, n)))


def edgeless(n: int) -> Multigraph:
    return Multigraph(n)


_BRYLAWSKI_COMMON = [
    "ag", "ah", "ai", "bc", "bj", "bk", "cd", "fc", "de",
    "bg", "cj", "ek", "ef", "ch", "ei",
]


def _lettered(pairs: list[str]) -> Multigraph:
    return Multigraph(11, tuple((ord(a) - 97, ord(b) - 97) for a, b in pairs))


def brylawski_pair() -> tuple[Multigraph, Multigraph]:
    """The smallest known non-isomorphic pair with equal polychromate
    (11 vertices, 18 edges each; vertices a..k are 0..10)."""
    g1 = _lettered(_BRYLAWSKI_COMMON[:9] + ["gj", "hf", "ik"] + _BRYLAWSKI_COMMON[9:])
    g2 = _lettered(_BRYLAWSKI_COMMON[:9] + ["hj", "if", "gk"] + _BRYLAWSKI_COMMON[9:])
    return g1, g2
