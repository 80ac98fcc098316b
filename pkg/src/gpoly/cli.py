"""``gpoly`` command line.

Exit codes: 0 success / EQUAL / PASS, 1 DIFFER / FAIL, 2 input could not be
parsed, 3 size guard exceeded, 4 precondition violated.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from . import equivalence as eq
from .errors import GraphParseError, GuardExceeded, PreconditionError
from .invariants import INVARIANTS, compute
from .multigraph import Multigraph, read_graph
from .polyring import Poly, mono_sort_key, format_mono
from .search import enumerate_source, graph6_source, run_search
from .verify import SUITES, run_suite

EXIT_DIFFER = 1
EXIT_PARSE = 2
EXIT_GUARD = 3
EXIT_PRECONDITION = 4


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text(encoding="utf-8")


def load_graph(path: str) -> Multigraph:
    return read_graph(_read_text(path))


def _render(value, fmt: str) -> str:
    if isinstance(value, (Poly, eq.PairedCoefficientMap)):
        if fmt == "json":
            return value.to_json()
        if isinstance(value, eq.PairedCoefficientMap):
            return value.to_text()
        return value.canonical_string()
    return str(value)


def _first_difference(a, b) -> str:
    if isinstance(a, eq.PairedCoefficientMap):
        keys = sorted(set(a.terms) | set(b.terms), reverse=True)
        for k in keys:
            if a.terms.get(k, 0) != b.terms.get(k, 0):
                return f"{list(k)}: {a.terms.get(k, 0)} vs {b.terms.get(k, 0)}"
        return "basis or size"
    keys = sorted(set(a.terms) | set(b.terms), key=mono_sort_key)
    for k in keys:
        if a.terms.get(k, 0) != b.terms.get(k, 0):
            return f"{format_mono(k) or '1'}: {a.terms.get(k, 0)} vs {b.terms.get(k, 0)}"
    return "none"


# ----------------------------------------------------------------------------


def cmd_compute(args) -> int:
    g = load_graph(args.graph)
    result = compute(args.invariant, g, force=args.force, jobs=args.jobs, truncate=args.truncate)
    print(_render(result.value, args.format))
    return 0


def cmd_compare(args) -> int:
    g1, g2 = load_graph(args.graph1), load_graph(args.graph2)
    a = compute(args.invariant, g1, force=args.force, jobs=args.jobs, truncate=args.truncate).value
    b = compute(args.invariant, g2, force=args.force, jobs=args.jobs, truncate=args.truncate).value
    if a == b:
        print("EQUAL")
        return 0
    print(f"DIFFER {_first_difference(a, b)}")
    return EXIT_DIFFER


def cmd_verify(args) -> int:
    names = list(SUITES) if args.suite == "all" else [args.suite]
    status = 0
    for name in names:
        res = run_suite(name, max_edges=args.max_edges, max_vertices=args.max_vertices)
        sys.stdout.write(res.to_text())
        if not res.passed:
            status = EXIT_DIFFER
            break
    return status


def cmd_search(args) -> int:
    start = time.perf_counter()
    parse_errors: list = []
    if args.graphs:
        source = _file_source(args.graphs, args.lenient, parse_errors)
    else:
        source = enumerate_source(args.enumerate)
    report = run_search(source, loopless=args.loopless, jobs=args.jobs)
    for lineno, msg in parse_errors:
        print(f"skipped {lineno}: {msg}", file=sys.stderr)
    if args.report:
        Path(args.report).write_text(report.to_json() + "\n", encoding="utf-8")
    if args.format == "json":
        print(report.to_json())
    else:
        sys.stdout.write(report.to_text())
    print(f"elapsed: {time.perf_counter() - start:.2f}s", file=sys.stderr)
    return 0


def _file_source(paths: list[str], lenient: bool, errors: list):
    """graph6 files (one graph per line) or single-graph edge-list files."""
    for path in paths:
        text = _read_text(path)
        first = next((ln.split() for ln in text.splitlines() if ln.strip()), [])
        if len(first) == 2 and all(tok.isdigit() for tok in first):
            g = read_graph(text)
            yield g.identifier(), g
            continue
        file_errors: list = []
        yield from graph6_source(text.splitlines(), lenient=lenient, errors=file_errors)
        errors.extend((f"{path}:{lineno}", msg) for lineno, msg in file_errors)


_CONVERSIONS = {
    ("ubar", "ybar-p"), ("ubar", "ybar-m"), ("ubar", "ext-polychromate"), ("ubar", "ubar"),
    ("ybar-p", "ubar"), ("ybar-p", "ybar-m"), ("ybar-p", "ext-polychromate"), ("ybar-p", "ybar-p"),
    ("u", "polychromate"),
}


def _load_poly(text: str) -> Poly:
    stripped = text.strip()
    if stripped.startswith("["):
        return Poly.from_json(stripped)
    return Poly.parse(stripped)


def _u_vertex_count(u: Poly) -> int:
    totals = {sum(idx[0] * e for (fam, idx), e in mono if fam == "x") for mono in u.terms}
    if len(totals) != 1:
        raise ValueError("U-polynomial monomials disagree on the vertex count")
    return totals.pop()


def cmd_convert(args) -> int:
    src, dst = args.source, args.target
    if (src, dst) not in _CONVERSIONS:
        print(f"unsupported conversion {src} -> {dst}", file=sys.stderr)
        return EXIT_PARSE
    text = _read_text(args.input)
    if src == "ybar-p":
        coeffs = eq.PairedCoefficientMap.from_json(text)
        if coeffs.basis != "p":
            raise ValueError("input map is not in the paired power-sum basis")
    elif src == "ubar":
        coeffs = eq.ubar_to_ybar(_load_poly(text))
    else:
        u = _load_poly(text)
        n = args.n if args.n is not None else _u_vertex_count(u)
        print(_render(eq.u_to_polychromate(u, n), args.format))
        return 0
    if dst == "ubar":
        out = eq.ybar_to_ubar(coeffs)
    elif dst == "ybar-p":
        out = coeffs
    elif dst == "ybar-m":
        out = eq.p_to_m(coeffs)
    else:
        out = eq.ybar_to_extended_polychromate(coeffs)
    print(_render(out, args.format))
    return 0


# ----------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="gpoly", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--truncate", type=int, default=None, metavar="N",
                       help="number of x variables for symmetric-function output (default n+2)")
        p.add_argument("--force", action="store_true", help="ignore size guards")
        p.add_argument("--jobs", type=int, default=1, metavar="K")

    p = sub.add_parser("compute", help="compute one invariant of a graph")
    p.add_argument("invariant", choices=INVARIANTS)
    p.add_argument("graph", help="edge-list file or single-line graph6 file ('-' for stdin)")
    common(p)
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("compare", help="compare one invariant on two graphs")
    p.add_argument("invariant", choices=INVARIANTS)
    p.add_argument("graph1")
    p.add_argument("graph2")
    common(p)
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("verify", help="run a property suite")
    p.add_argument("suite", choices=tuple(SUITES) + ("all",))
    p.add_argument("--max-edges", type=int, default=None)
    p.add_argument("--max-vertices", type=int, default=None)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("search", help="look for equal U with different Ubar")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--graphs", metavar="FILE", nargs="+",
                     help="graph6 files (one graph per line) or edge-list files")
    src.add_argument("--enumerate", type=int, metavar="MAX_N",
                     help="all labelled connected simple graphs up to MAX_N vertices")
    p.add_argument("--loopless", action="store_true")
    p.add_argument("--lenient", action="store_true", help="skip malformed graph6 lines")
    p.add_argument("--report", metavar="PATH", help="write the full JSON report here")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--jobs", type=int, default=1, metavar="K")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("convert", help="convert between Ubar, Ybar and the polychromates")
    p.add_argument("--from", dest="source", required=True, choices=("ubar", "ybar-p", "u"))
    p.add_argument("--to", dest="target", required=True,
                   choices=("ybar-p", "ybar-m", "ext-polychromate", "ubar", "polychromate"))
    p.add_argument("--n", type=int, default=None, help="vertex count for --from u")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("input", nargs="?", default="-")
    p.set_defaults(func=cmd_convert)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (GraphParseError, json.JSONDecodeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except GuardExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except PreconditionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
