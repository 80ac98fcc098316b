"""Multigraphs with loops, parallel edges and positive vertex weights.

Vertices are ``0 .. n-1`` in the Python API and ``1 .. n`` in the text
formats.  Edges are identified by their position in ``edges``, so parallel
edges stay distinguishable when summing over edge subsets.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import GraphParseError

Edge = tuple[int, int]
PairPartition = tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class Multigraph:
    n: int
    edges: tuple[Edge, ...] = ()
    weights: tuple[int, ...] = field(default=None)  # type: ignore[assignment]

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("vertex count must be non-negative")
        edges = tuple((int(u), int(v)) for u, v in self.edges)
        for u, v in edges:
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge ({u}, {v}) has an endpoint outside 0..{self.n - 1}")
        object.__setattr__(self, "edges", edges)
        if self.weights is None:
            object.__setattr__(self, "weights", (1,) * self.n)
        else:
            weights = tuple(int(w) for w in self.weights)
            if len(weights) != self.n:
                raise ValueError("need exactly one weight per vertex")
            if any(w < 1 for w in weights):
                raise ValueError("vertex weights must be >= 1")
            object.__setattr__(self, "weights", weights)

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def total_weight(self) -> int:
        return sum(self.weights)

    def has_loops(self) -> bool:
        return any(u == v for u, v in self.edges)

    def is_simple(self) -> bool:
        seen = set()
        for u, v in self.edges:
            if u == v:
                return False
            key = (min(u, v), max(u, v))
            if key in seen:
                return False
            seen.add(key)
        return True

    def with_weights(self, weights: Sequence[int]) -> Multigraph:
        return Multigraph(self.n, self.edges, tuple(weights))

    def unweighted(self) -> Multigraph:
        return Multigraph(self.n, self.edges)

    def degrees(self) -> list[int]:
        deg = [0] * self.n
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    def to_edge_list(self) -> str:
        lines = [f"{self.n} {self.m}"]
        lines += [f"{u + 1} {v + 1}" for u, v in self.edges]
        if any(w != 1 for w in self.weights):
            lines.append("weights " + " ".join(str(w) for w in self.weights))
        return "\n".join(lines) + "\n"

    def identifier(self) -> str:
        """graph6 for simple graphs, else a short hash of the edge list."""
        if self.is_simple() and all(w == 1 for w in self.weights) and self.n <= 62:
            return to_graph6(self)
        return "h:" + hashlib.sha256(self.to_edge_list().encode()).hexdigest()[:16]


@dataclass(frozen=True)
class ComponentSummary:
    """Per-component (vertices, edges, weight) of a spanning subgraph."""

    parts: tuple[tuple[int, int, int], ...]

    @property
    def k(self) -> int:
        return len(self.parts)


# ----------------------------------------------------------------------------
# ingestion


def parse_edge_list(text: str) -> Multigraph:
    lines = text.splitlines()
    # tolerate trailing blank lines only
    while lines and not lines[-1].strip():
        lines.pop()
    if not lines:
        raise GraphParseError("empty document", 1)

    def ints(lineno: int, tokens: list[str]) -> list[int]:
        try:
            return [int(t) for t in tokens]
        except ValueError:
            raise GraphParseError(f"expected integers, got {' '.join(tokens)!r}", lineno) from None

    header = lines[0].split()
    if len(header) != 2:
        raise GraphParseError("header must be 'n m'", 1)
    n, m = ints(1, header)
    if n < 0 or m < 0:
        raise GraphParseError("n and m must be non-negative", 1)
    body = lines[1:]
    weights = None
    if body and body[-1].split() and body[-1].split()[0] == "weights":
        wtoks = body[-1].split()[1:]
        lineno = len(lines)
        weights = ints(lineno, wtoks)
        if len(weights) != n:
            raise GraphParseError(f"expected {n} weights, got {len(weights)}", lineno)
        if any(w < 1 for w in weights):
            raise GraphParseError("weights must be >= 1", lineno)
        body = body[:-1]
    if len(body) != m:
        raise GraphParseError(f"expected {m} edge lines, got {len(body)}", len(lines))
    edges = []
    for i, line in enumerate(body, start=2):
        tokens = line.split()
        if len(tokens) != 2:
            raise GraphParseError(f"edge line must be 'u v', got {line!r}", i)
        u, v = ints(i, tokens)
        if not (1 <= u <= n and 1 <= v <= n):
            raise GraphParseError(f"endpoint out of range 1..{n}", i)
        edges.append((u - 1, v - 1))
    return Multigraph(n, tuple(edges), tuple(weights) if weights else None)


def parse_graph6(line: str) -> Multigraph:
    data = line.strip()
    if data.startswith(">>graph6<<"):
        data = data[10:]
    if not data:
        raise GraphParseError("empty graph6 string")
    codes = [ord(ch) - 63 for ch in data]
    if any(c < 0 or c > 63 for c in codes):
        raise GraphParseError("graph6 byte outside 63..126")
    if codes[0] < 63:
        n, rest = codes[0], codes[1:]
    elif len(codes) >= 4 and codes[1] < 63:
        n = (codes[1] << 12) | (codes[2] << 6) | codes[3]
        rest = codes[4:]
    else:
        raise GraphParseError("unsupported graph6 size header")
    nbits = n * (n - 1) // 2
    if len(rest) != (nbits + 5) // 6:
        raise GraphParseError(f"graph6 body has {len(rest)} bytes, expected {(nbits + 5) // 6}")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if (rest[k // 6] >> (5 - k % 6)) & 1:
                edges.append((i, j))
            k += 1
    return Multigraph(n, tuple(edges))


def to_graph6(g: Multigraph) -> str:
    if not g.is_simple():
        raise ValueError("graph6 encodes simple graphs only")
    if g.n > 62:
        raise ValueError("graph6 writer supports n <= 62")
    adj = {(min(u, v), max(u, v)) for u, v in g.edges}
    bits = [1 if (i, j) in adj else 0 for j in range(1, g.n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    out = [chr(g.n + 63)]
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k:k + 6]:
            val = (val << 1) | b
        out.append(chr(val + 63))
    return "".join(out)


def read_graph(text: str) -> Multigraph:
    """Edge-list document, or a single graph6 line."""
    stripped = text.strip()
    if stripped and "\n" not in stripped and " " not in stripped:
        return parse_graph6(stripped)
    return parse_edge_list(text)


# ----------------------------------------------------------------------------
# structure


def _check_subset(g: Multigraph, subset: Iterable[int]) -> list[int]:
    idx = sorted(set(subset))
    for e in idx:
        if not 0 <= e < g.m:
            raise IndexError(f"edge index {e} out of range 0..{g.m - 1}")
    return idx


def spanning_subgraph(g: Multigraph, subset: Iterable[int]) -> Multigraph:
    idx = _check_subset(g, subset)
    return Multigraph(g.n, tuple(g.edges[e] for e in idx), g.weights)


def _component_labels(n: int, edges: Iterable[Edge]) -> list[int]:
    parent = list(range(n))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for u, v in edges:
        ru, rv = find(u), find(v)
        if ru != rv:
            if ru < rv:
                parent[rv] = ru
            else:
                parent[ru] = rv
    return [find(a) for a in range(n)]


def components(g: Multigraph) -> ComponentSummary:
    labels = _component_labels(g.n, g.edges)
    stats: dict[int, list[int]] = {}
    for v, r in enumerate(labels):
        s = stats.setdefault(r, [0, 0, 0])
        s[0] += 1
        s[2] += g.weights[v]
    for u, _ in g.edges:
        stats[labels[u]][1] += 1
    return ComponentSummary(tuple(tuple(stats[r]) for r in sorted(stats)))  # type: ignore[misc]


def component_count(g: Multigraph, subset: Iterable[int] | None = None) -> int:
    edges = g.edges if subset is None else (g.edges[e] for e in _check_subset(g, subset))
    return len(set(_component_labels(g.n, edges)))


def rank(g: Multigraph, subset: Iterable[int]) -> int:
    return g.n - component_count(g, subset)


def component_signature(g: Multigraph, subset: Iterable[int]) -> PairPartition:
    """Sorted (vertices, edges) per component of the spanning subgraph."""
    summary = components(spanning_subgraph(g, subset))
    return tuple(sorted(((c, e) for c, e, _ in summary.parts), reverse=True))


def delete_edge(g: Multigraph, e: int) -> Multigraph:
    if not 0 <= e < g.m:
        raise IndexError(f"edge index {e} out of range")
    return Multigraph(g.n, g.edges[:e] + g.edges[e + 1:], g.weights)


def contract_edge(g: Multigraph, e: int) -> Multigraph:
    """Merge the endpoints of a non-loop edge into the smaller index.

    Remaining edges between the endpoints become loops; the merged vertex
    carries the summed weight, and indices above the removed vertex shift
    down by one.
    """
    if not 0 <= e < g.m:
        raise IndexError(f"edge index {e} out of range")
    u, v = g.edges[e]
    if u == v:
        raise ValueError("cannot contract a loop")
    keep, gone = min(u, v), max(u, v)

    def relabel(a: int) -> int:
        if a == gone:
            a = keep
        return a - 1 if a > gone else a

    edges = tuple((relabel(a), relabel(b)) for i, (a, b) in enumerate(g.edges) if i != e)
    weights = list(g.weights)
    weights[keep] += weights[gone]
    del weights[gone]
    return Multigraph(g.n - 1, edges, tuple(weights))
