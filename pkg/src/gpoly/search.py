"""Search for graphs with equal U but different Ū.

Graphs are bucketed by the canonical string of their U-polynomial; inside a
bucket every pair is compared on Ū.  Both strings come from one subset
census per graph.  Reported pairs are recomputed along the pure-Python path
before they are accepted.
"""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .census import subset_census
from .errors import GraphParseError
from .generate import connected_simple_graphs
from .multigraph import Multigraph, parse_graph6
from .polyring import Poly, make_var, mono_from_counts


@dataclass
class SearchReport:
    groups: dict[str, list[str]] = field(default_factory=dict)
    counterexamples: list[tuple[str, str]] = field(default_factory=list)
    graphs_processed: int = 0
    skipped: int = 0
    ubar_classes: int = 0

    @property
    def collision_groups(self) -> int:
        return sum(1 for ids in self.groups.values() if len(ids) > 1)

    def stats(self) -> dict:
        return {
            "graphs_processed": self.graphs_processed,
            "skipped": self.skipped,
            "u_classes": len(self.groups),
            "u_collision_groups": self.collision_groups,
            "ubar_classes": self.ubar_classes,
            "counterexamples": len(self.counterexamples),
        }

    def to_json_obj(self) -> dict:
        return {
            "stats": self.stats(),
            "counterexamples": [list(p) for p in self.counterexamples],
            "groups": [{"u": u, "graphs": ids} for u, ids in self.groups.items()],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), indent=1)

    def to_text(self) -> str:
        lines = [f"{k}: {v}" for k, v in self.stats().items()]
        for a, b in self.counterexamples:
            lines.append(f"COUNTEREXAMPLE {a} {b}")
        return "\n".join(lines) + "\n"


def fingerprints(g: Multigraph) -> tuple[str, str]:
    """Canonical strings of (U, Ū) from a single subset census."""
    census = subset_census(g)
    y = Poly.var("y")
    u_groups: dict = {}
    ubar_terms: dict = {}
    for key, count in census.items():
        xs: dict = {}
        zs: dict = {}
        nullity = 0
        for _, c, e in key:
            xv = make_var("x", c)
            xs[xv] = xs.get(xv, 0) + 1
            zv = make_var("z", c, e - c + 1)
            zs[zv] = zs.get(zv, 0) + 1
            nullity += e - c + 1
        gk = (mono_from_counts(xs), nullity)
        u_groups[gk] = u_groups.get(gk, 0) + count
        zm = mono_from_counts(zs)
        ubar_terms[zm] = ubar_terms.get(zm, 0) + count
    u_acc: dict = {}
    powers: dict[int, Poly] = {}
    for (mono, nullity), count in u_groups.items():
        if nullity not in powers:
            powers[nullity] = (y - 1) ** nullity
        for m2, c2 in (Poly({mono: 1}) * powers[nullity]).terms.items():
            u_acc[m2] = u_acc.get(m2, 0) + count * c2
    return Poly(u_acc).canonical_string(), Poly(ubar_terms).canonical_string()


def _fingerprint_task(item):
    ident, g = item
    return ident, fingerprints(g)


def recheck_pair(g1: Multigraph, g2: Multigraph) -> bool:
    """True when the pair really has equal U and unequal Ū."""
    from .invariants import u_poly, ubar

    method = "python" if max(g1.m, g2.m) <= 16 else "numpy"
    return (
        u_poly(g1, method=method) == u_poly(g2, method=method)
        and ubar(g1, method=method) != ubar(g2, method=method)
    )


def run_search(
    graphs: Iterable[tuple[str, Multigraph]],
    *,
    loopless: bool = False,
    jobs: int = 1,
) -> SearchReport:
    report = SearchReport()
    kept: list[tuple[str, Multigraph]] = []
    for ident, g in graphs:
        if loopless and g.has_loops():
            report.skipped += 1
            continue
        kept.append((ident, g))
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_fingerprint_task, kept, chunksize=64))
    else:
        results = [_fingerprint_task(item) for item in kept]
    report.graphs_processed = len(kept)

    by_id = dict(kept)
    buckets: dict[str, list[tuple[str, str]]] = {}
    ubar_seen = set()
    for ident, (ustr, ubstr) in results:
        buckets.setdefault(ustr, []).append((ident, ubstr))
        ubar_seen.add(ubstr)
    report.ubar_classes = len(ubar_seen)
    seen_pairs = set()
    for ustr, members in buckets.items():
        report.groups[ustr] = [ident for ident, _ in members]
        # one representative per distinct Ū inside the bucket
        reps: dict[str, str] = {}
        for ident, ubstr in members:
            reps.setdefault(ubstr, ident)
        rep_ids = list(reps.values())
        for i in range(len(rep_ids)):
            for j in range(i + 1, len(rep_ids)):
                pair = (rep_ids[i], rep_ids[j])
                if pair in seen_pairs:
                    continue
                seen_pairs.add(pair)
                if recheck_pair(by_id[pair[0]], by_id[pair[1]]):
                    report.counterexamples.append(pair)
    return report


def enumerate_source(max_n: int) -> Iterator[tuple[str, Multigraph]]:
    seen = set()
    for g in connected_simple_graphs(max_n):
        key = (g.n, g.edges)
        if key in seen:
            continue
        seen.add(key)
        yield g.identifier(), g


def graph6_source(lines: Iterable[str], *, lenient: bool = False, errors: list | None = None) -> Iterator[tuple[str, Multigraph]]:
    for lineno, line in enumerate(lines, start=1):
        text = line.strip()
        if not text:
            continue
        try:
            g = parse_graph6(text)
        except GraphParseError as exc:
            if not lenient:
                raise GraphParseError(str(exc), lineno) from None
            if errors is not None:
                errors.append((lineno, str(exc)))
            continue
        yield text, g
