"""Vectorised censuses behind the subset and partition expansions.

``subset_census`` walks all ``2**m`` edge subsets and counts how often each
multiset of component statistics ``(weight, vertices, edges)`` occurs.
``partition_census`` does the same for vertex partitions with block
statistics ``(size, internal edges)``.  Every invariant defined by one of the
two sums is a function of the census, so each graph is expanded once.

Both censuses split their index range into contiguous chunks whose partial
counts are merged by addition; the result does not depend on chunking or on
the number of workers.
"""

from __future__ import annotations

from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from functools import lru_cache
from typing import Iterable

import numpy as np

from .errors import GuardExceeded
from .multigraph import Multigraph, _component_labels
from .partitions import rgs_array

Component = tuple[int, int, int]  # (weight, vertices, edges)
SubsetKey = tuple[Component, ...]
Block = tuple[int, int]  # (size, internal edges)
PartitionKey = tuple[Block, ...]

MAX_SUBSET_EDGES = 26
MAX_PARTITION_VERTICES = 13
CHUNK_BITS = 16


def check_edge_guard(g: Multigraph, force: bool = False, limit: int = MAX_SUBSET_EDGES) -> None:
    if g.m > limit and not force:
        raise GuardExceeded(f"{g.m} edges means 2^{g.m} subsets (guard is {limit}); pass force=True (CLI: --force) to run anyway")


def check_vertex_guard(g: Multigraph, force: bool = False, limit: int = MAX_PARTITION_VERTICES) -> None:
    if g.n > limit and not force:
        raise GuardExceeded(f"{g.n} vertices exceeds the set-partition guard {limit}; pass force=True (CLI: --force) to run anyway")


# ----------------------------------------------------------------------------
# edge subsets


def _count_rows(codes: np.ndarray, bound: int) -> tuple[np.ndarray, np.ndarray]:
    """Distinct multisets of row entries (``-1`` = empty slot) with counts.

    Rows come back sorted in decreasing order.  Each sorted row is packed
    into one int64 when ``(bound + 1) ** width`` fits; otherwise rows are
    compared whole.
    """
    codes = -np.sort(-codes, axis=1)
    width = codes.shape[1]
    radix = bound + 1
    if radix ** width < 2 ** 63:
        key = np.zeros(codes.shape[0], dtype=np.int64)
        for col in range(width):
            key = key * radix + (codes[:, col] + 1)
        ukey, first, counts = np.unique(key, return_index=True, return_counts=True)
        return codes[first], counts
    return np.unique(codes, axis=0, return_counts=True)


def _decode_rows(codes: np.ndarray, counts: np.ndarray, base_c: int, base_e: int) -> Counter:
    out: Counter = Counter()
    for row, cnt in zip(codes.tolist(), counts.tolist()):
        key = []
        for code in row:
            if code < 0:
                break
            w, rest = divmod(code, base_c * base_e)
            c, e = divmod(rest, base_e)
            key.append((w, c, e))
        out[tuple(key)] += cnt
    return out


def _subset_chunk(args) -> Counter:
    n, edges, weights, start, stop = args
    m = len(edges)
    masks = np.arange(start, stop, dtype=np.int64)
    rows = len(masks)
    if n == 0:
        return Counter({(): rows})
    bits = ((masks[:, None] >> np.arange(m, dtype=np.int64)) & 1).astype(bool) if m else np.zeros((rows, 0), bool)
    labels = np.tile(np.arange(n, dtype=np.int16), (rows, 1))
    # union by whole-class relabelling: one pass over the edges suffices and
    # each label is the smallest vertex of its class
    for e, (u, v) in enumerate(edges):
        if u == v:
            continue
        lu = labels[:, u]
        lv = labels[:, v]
        idx = np.nonzero(bits[:, e] & (lu != lv))[0]
        if not len(idx):
            continue
        low = np.minimum(lu[idx], lv[idx])[:, None]
        high = np.maximum(lu[idx], lv[idx])[:, None]
        sub = labels[idx]
        labels[idx] = np.where(sub == high, low, sub)
    wts = np.asarray(weights, dtype=np.int64)
    base_c = n + 1
    base_e = m + 1
    codes = np.full((rows, n), -1, dtype=np.int64)
    vert = np.zeros((rows, n), dtype=np.int64)
    wsum = np.zeros((rows, n), dtype=np.int64)
    ecnt = np.zeros((rows, n), dtype=np.int64)
    ar = np.arange(rows)
    for v in range(n):
        lab = labels[:, v]
        vert[ar, lab] += 1
        wsum[ar, lab] += wts[v]
    for e, (u, _) in enumerate(edges):
        ecnt[ar, labels[:, u]] += bits[:, e]
    present = vert > 0
    codes[present] = (wsum[present] * base_c + vert[present]) * base_e + ecnt[present]
    uniq, counts = _count_rows(codes, (int(wts.sum()) + 1) * base_c * base_e)
    return _decode_rows(uniq, counts, base_c, base_e)


def _subset_chunk_python(args) -> Counter:
    n, edges, weights, start, stop = args
    out: Counter = Counter()
    for mask in range(start, stop):
        chosen = [edges[e] for e in range(len(edges)) if mask >> e & 1]
        labels = _component_labels(n, chosen)
        stats: dict[int, list[int]] = {}
        for v, r in enumerate(labels):
            s = stats.setdefault(r, [0, 0, 0])
            s[0] += weights[v]
            s[1] += 1
        for u, _ in chosen:
            stats[labels[u]][2] += 1
        out[tuple(sorted((tuple(s) for s in stats.values()), reverse=True))] += 1
    return out


def _ranges(total: int, chunk: int) -> list[tuple[int, int]]:
    return [(s, min(s + chunk, total)) for s in range(0, total, chunk)]


def _merge(parts: Iterable[Counter]) -> Counter:
    total: Counter = Counter()
    for p in parts:
        total.update(p)
    return total


def subset_census(
    g: Multigraph,
    *,
    force: bool = False,
    jobs: int = 1,
    method: str = "numpy",
    chunk_bits: int = CHUNK_BITS,
) -> Counter:
    """Map each sorted tuple of component ``(weight, vertices, edges)`` to the
    number of edge subsets producing it."""
    check_edge_guard(g, force)
    worker = _subset_chunk if method == "numpy" else _subset_chunk_python
    total = 1 << g.m
    tasks = [(g.n, g.edges, g.weights, s, e) for s, e in _ranges(total, 1 << chunk_bits)]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return _merge(pool.map(worker, tasks))
    return _merge(map(worker, tasks))


# ----------------------------------------------------------------------------
# vertex partitions


def _partition_chunk(args) -> Counter:
    n, edges, prefix = args
    rgs = rgs_array(n, prefix).astype(np.int64)
    rows = rgs.shape[0]
    m = len(edges)
    ar = np.arange(rows)
    size = np.zeros((rows, n), dtype=np.int64)
    inner = np.zeros((rows, n), dtype=np.int64)
    for v in range(n):
        size[ar, rgs[:, v]] += 1
    for u, v in edges:
        same = rgs[:, u] == rgs[:, v]
        inner[ar, rgs[:, u]] += same
    base = m + 1
    codes = np.where(size > 0, size * base + inner, -1)
    uniq, counts = _count_rows(codes, (n + 1) * base)
    out: Counter = Counter()
    for row, cnt in zip(uniq.tolist(), counts.tolist()):
        out[tuple(divmod(c, base) for c in row if c >= 0)] += cnt
    return out


@lru_cache(maxsize=None)
def _extension_count(remaining: int, blocks: int) -> int:
    if remaining == 0:
        return 1
    return blocks * _extension_count(remaining - 1, blocks) + _extension_count(remaining - 1, blocks + 1)


def _partition_prefixes(n: int, max_rows: int) -> list[tuple[int, ...]]:
    """Split the RGS tree into prefixes of at most ``max_rows`` leaves each."""
    out = []
    stack = [(0,)]
    while stack:
        prefix = stack.pop()
        blocks = max(prefix) + 1
        if len(prefix) == n or _extension_count(n - len(prefix), blocks) <= max_rows:
            out.append(prefix)
        else:
            stack.extend(prefix + (b,) for b in range(blocks, -1, -1))
    return out


def partition_census(
    g: Multigraph, *, force: bool = False, jobs: int = 1, max_rows: int = 1 << 20
) -> Counter:
    """Map each sorted tuple of block ``(size, internal edges)`` to the number
    of vertex partitions producing it."""
    check_vertex_guard(g, force)
    if g.n == 0:
        return Counter({(): 1})
    tasks = [(g.n, g.edges, p) for p in _partition_prefixes(g.n, max_rows)]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return _merge(pool.map(_partition_chunk, tasks))
    return _merge(map(_partition_chunk, tasks))
