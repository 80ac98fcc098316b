"""Integer partitions, integer pair partitions and set partitions."""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator, Sequence

import numpy as np

from .multigraph import Multigraph

IntegerPartition = tuple[int, ...]
PairPartition = tuple[tuple[int, int], ...]
VertexPartition = tuple[tuple[int, ...], ...]


def canonical_pairs(pairs) -> PairPartition:
    """Sort pairs into lexicographically decreasing order."""
    return tuple(sorted(((int(a), int(b)) for a, b in pairs), reverse=True))


def is_pair_partition(pairs: Sequence[tuple[int, int]], a: int, b: int) -> bool:
    if not pairs:
        return a == 0
    if any(ai < 1 or bi < 0 for ai, bi in pairs):
        return False
    if sum(ai for ai, _ in pairs) != a or sum(bi for _, bi in pairs) > b:
        return False
    return list(pairs) == sorted(pairs, reverse=True)


def integer_partitions(n: int) -> list[IntegerPartition]:
    """All partitions of ``n`` in reverse-lexicographic order."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return list(_partitions_bounded(n, n))


@lru_cache(maxsize=None)
def _partitions_bounded(n: int, largest: int) -> tuple[IntegerPartition, ...]:
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions_bounded(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def integer_pair_partitions(a: int, b: int) -> list[PairPartition]:
    """Every pair partition of ``(a, b)``; second coordinates sum to at most ``b``.

    Ordered by the underlying integer partition (reverse-lex), then
    reverse-lex on the pair sequence.
    """
    if a < 1 or b < 0:
        raise ValueError("need a >= 1 and b >= 0")
    out: list[PairPartition] = []
    for tau in integer_partitions(a):
        found = []
        _assign_seconds(tau, 0, b, None, (), found)
        out.extend(sorted(found, reverse=True))
    return out


def _assign_seconds(tau, i, budget, prev, acc, found):
    if i == len(tau):
        found.append(acc)
        return
    # within a run of equal first coordinates the seconds must not increase
    cap = budget if prev is None or tau[i] != prev[0] else min(budget, prev[1])
    for bi in range(cap, -1, -1):
        pair = (tau[i], bi)
        _assign_seconds(tau, i + 1, budget - bi, pair, acc + (pair,), found)


def set_partitions(k: int) -> Iterator[VertexPartition]:
    """Set partitions of ``{0..k-1}`` in restricted-growth-string order."""
    if k < 1:
        raise ValueError("k must be >= 1")
    for rgs in _rgs(k):
        blocks: list[list[int]] = []
        for v, b in enumerate(rgs):
            if b == len(blocks):
                blocks.append([v])
            else:
                blocks[b].append(v)
        yield tuple(tuple(bl) for bl in blocks)


def _rgs(k: int) -> Iterator[tuple[int, ...]]:
    a = [0] * k
    # m[i] = max(a[0..i])
    mx = [0] * k
    while True:
        yield tuple(a)
        i = k - 1
        while i > 0 and a[i] > mx[i - 1]:
            i -= 1
        if i == 0:
            return
        a[i] += 1
        mx[i] = max(mx[i - 1], a[i])
        for j in range(i + 1, k):
            a[j] = 0
            mx[j] = mx[i]


def rgs_array(k: int, prefix: Sequence[int] = (0,)) -> np.ndarray:
    """All restricted growth strings of length ``k`` extending ``prefix``.

    Rows come out in the same order as :func:`set_partitions`.
    """
    if k < len(prefix):
        raise ValueError("prefix longer than k")
    arr = np.array([list(prefix)], dtype=np.int8)
    mx = np.array([max(prefix) if len(prefix) else -1], dtype=np.int16)
    for _ in range(len(prefix), k):
        counts = (mx + 2).astype(np.int64)
        total = int(counts.sum())
        starts = np.cumsum(counts) - counts
        vals = (np.arange(total) - np.repeat(starts, counts)).astype(np.int8)
        arr = np.repeat(arr, counts, axis=0)
        arr = np.concatenate([arr, vals[:, None]], axis=1)
        mx = np.maximum(np.repeat(mx, counts), vals)
    return arr


def bell_numbers(limit: int) -> list[int]:
    """Bell numbers B(0..limit) via the Bell triangle."""
    bells = [1]
    row = [1]
    for _ in range(limit):
        nxt = [row[-1]]
        for x in row:
            nxt.append(nxt[-1] + x)
        row = nxt
        bells.append(row[0])
    return bells


def partition_type(pi: VertexPartition) -> IntegerPartition:
    return tuple(sorted((len(b) for b in pi), reverse=True))


def check_vertex_partition(g: Multigraph, pi: VertexPartition) -> None:
    seen = [v for block in pi for v in block]
    if any(not block for block in pi):
        raise ValueError("empty block")
    if sorted(seen) != list(range(g.n)):
        raise ValueError("blocks do not partition the vertex set")


def pair_type_of_vertex_partition(g: Multigraph, pi: VertexPartition) -> PairPartition:
    """(block size, edges inside the block) per block, canonically sorted."""
    check_vertex_partition(g, pi)
    where = {}
    for i, block in enumerate(pi):
        for v in block:
            where[v] = i
    inner = [0] * len(pi)
    for u, v in g.edges:
        if where[u] == where[v]:
            inner[where[u]] += 1
    return canonical_pairs((len(block), inner[i]) for i, block in enumerate(pi))


def internal_edge_count(g: Multigraph, pi: VertexPartition) -> int:
    return sum(b for _, b in pair_type_of_vertex_partition(g, pi))


def coarsening_count(tau: IntegerPartition, tau_prime: IntegerPartition) -> int:
    """Coarsenings of a fixed partition of type ``tau`` that have type ``tau_prime``."""
    tau = tuple(sorted(tau, reverse=True))
    tau_prime = tuple(sorted(tau_prime, reverse=True))
    if sum(tau) != sum(tau_prime):
        raise ValueError("partitions of different totals")
    return _coarsening_table(tau).get(tau_prime, 0)


@lru_cache(maxsize=None)
def _coarsening_table(tau: IntegerPartition) -> dict[IntegerPartition, int]:
    table: dict[IntegerPartition, int] = {}
    if not tau:
        return {(): 1}
    for sigma in set_partitions(len(tau)):
        merged = tuple(sorted((sum(tau[i] for i in block) for block in sigma), reverse=True))
        table[merged] = table.get(merged, 0) + 1
    return table


def coarsening_table(tau: IntegerPartition) -> dict[IntegerPartition, int]:
    return dict(_coarsening_table(tuple(sorted(tau, reverse=True))))
