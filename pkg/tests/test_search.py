import pytest

from gpoly import catalog
from gpoly import invariants as inv
from gpoly.errors import GraphParseError
from gpoly.search import enumerate_source, fingerprints, graph6_source, recheck_pair, run_search


def _named(*graphs):
    return [(g.identifier(), g) for g in graphs]


def test_fingerprints_match_direct_computation():
    for g in [catalog.triangle(), catalog.loop_at_end(), catalog.complete(4)]:
        u, ub = fingerprints(g)
        assert u == inv.u_poly(g).canonical_string()
        assert ub == inv.ubar(g).canonical_string()


def test_loop_pair_is_reported_unless_filtered():
    g1, g2 = catalog.loop_at_end(), catalog.loop_in_middle()
    report = run_search(_named(g1, g2))
    assert len(report.counterexamples) == 1
    a, b = report.counterexamples[0]
    assert {a, b} == {g1.identifier(), g2.identifier()}
    assert recheck_pair(g1, g2)
    filtered = run_search(_named(g1, g2), loopless=True)
    assert filtered.graphs_processed == 0 and filtered.skipped == 2
    assert not filtered.counterexamples


def test_brylawski_pair_collides_under_both():
    report = run_search(_named(*catalog.brylawski_pair()))
    stats = report.stats()
    assert stats["u_classes"] == 1 and stats["u_collision_groups"] == 1
    assert stats["ubar_classes"] == 1
    assert stats["counterexamples"] == 0


def test_enumeration_small():
    report = run_search(enumerate_source(5), loopless=True)
    assert report.graphs_processed == 1 + 1 + 4 + 38 + 728
    assert report.counterexamples == []
    assert report.stats()["u_classes"] == report.stats()["ubar_classes"]


def test_report_independent_of_worker_count():
    one = run_search(enumerate_source(4)).to_json()
    two = run_search(enumerate_source(4), jobs=2).to_json()
    assert one == two


def test_graph6_source_errors():
    lines = ["Bw", "", "!!", "Bg"]
    with pytest.raises(GraphParseError) as err:
        list(graph6_source(lines))
    assert err.value.line == 3
    errors = []
    got = list(graph6_source(lines, lenient=True, errors=errors))
    assert [ident for ident, _ in got] == ["Bw", "Bg"]
    assert errors and errors[0][0] == 3
