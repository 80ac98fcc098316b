import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gpoly import catalog
from gpoly.errors import GraphParseError
from gpoly.multigraph import (
    Multigraph,
    component_count,
    component_signature,
    components,
    contract_edge,
    delete_edge,
    parse_edge_list,
    parse_graph6,
    rank,
    read_graph,
    to_graph6,
)


@st.composite
def multigraphs(draw, max_n=5, max_m=6):
    n = draw(st.integers(1, max_n))
    edges = draw(st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), max_size=max_m))
    weights = draw(st.lists(st.integers(1, 3), min_size=n, max_size=n))
    return Multigraph(n, tuple(edges), tuple(weights))


def test_edge_list_round_trip_with_weights():
    text = "3 3\n1 2\n2 3\n1 1\nweights 1 2 3\n"
    g = parse_edge_list(text)
    assert g.n == 3 and g.edges == ((0, 1), (1, 2), (0, 0)) and g.weights == (1, 2, 3)
    assert g.to_edge_list() == text


@pytest.mark.parametrize(
    "text, line",
    [
        ("", 1),
        ("3\n", 1),
        ("2 1\n1 5\n", 2),
        ("2 2\n1 2\n", 2),
        ("2 1\n1 x\n", 2),
        ("2 1\n1 2\nweights 1\n", 3),
        ("2 1\n1 2\nweights 0 1\n", 3),
    ],
)
def test_edge_list_errors_carry_line_numbers(text, line):
    with pytest.raises(GraphParseError) as err:
        parse_edge_list(text)
    assert err.value.line == line


def _edge_set(g):
    return sorted((min(u, v), max(u, v)) for u, v in g.edges)


def test_graph6_known_strings():
    assert _edge_set(parse_graph6("Bw")) == _edge_set(catalog.triangle())
    assert to_graph6(catalog.complete(4)) == "C~"
    g = parse_graph6("Bg")
    assert g.edges == ((0, 1), (1, 2))


def test_graph6_agrees_with_networkx():
    for g in [catalog.complete(5), catalog.path2(), catalog.brylawski_pair()[0]]:
        ours = to_graph6(g)
        h = nx.Graph()
        h.add_nodes_from(range(g.n))
        h.add_edges_from(g.edges)
        theirs = nx.to_graph6_bytes(h, header=False).decode().strip()
        assert ours == theirs
        assert _edge_set(parse_graph6(ours)) == _edge_set(g)


def test_graph6_long_header():
    line = "~??~" + "?" * ((63 * 62 // 2 + 5) // 6)
    g = parse_graph6(line)
    assert g.n == 63 and g.m == 0


@pytest.mark.parametrize("bad", ["", "B", "B ", "Bww", chr(200)])
def test_graph6_rejects_malformed(bad):
    with pytest.raises(GraphParseError):
        parse_graph6(bad)


def test_read_graph_dispatch():
    assert _edge_set(read_graph("Bw\n")) == _edge_set(catalog.triangle())
    assert read_graph("3 2\n1 2\n2 3\n") == catalog.path2()


def test_identifier():
    assert catalog.triangle().identifier() == "Bw"
    ident = catalog.loop_at_end().identifier()
    assert ident.startswith("h:") and ident == catalog.loop_at_end().identifier()
    assert ident != catalog.loop_in_middle().identifier()


def test_components_and_rank():
    g = Multigraph(5, ((0, 1), (1, 1), (2, 3), (2, 3)), (1, 2, 3, 4, 5))
    summary = components(g)
    assert summary.k == 3
    assert summary.parts == ((2, 2, 3), (2, 2, 7), (1, 0, 5))
    assert component_count(g) == 3
    assert rank(g, range(g.m)) == 2
    assert rank(g, []) == 0
    assert component_signature(g, [0, 1, 2]) == ((2, 2), (2, 1), (1, 0))
    with pytest.raises(IndexError):
        rank(g, [9])


def test_delete_and_contract():
    g = Multigraph(3, ((0, 1), (0, 1), (1, 2)), (1, 2, 3))
    assert delete_edge(g, 1).edges == ((0, 1), (1, 2))
    c = contract_edge(g, 0)
    assert c.n == 2 and c.weights == (3, 3)
    assert c.edges == ((0, 0), (0, 1))
    c2 = contract_edge(g, 2)
    assert c2.edges == ((0, 1), (0, 1)) and c2.weights == (1, 5)
    with pytest.raises(ValueError):
        contract_edge(catalog.single_loop(), 0)


@settings(max_examples=80, deadline=None)
@given(multigraphs())
def test_contraction_preserves_weight_and_rank(g):
    for e, (u, v) in enumerate(g.edges):
        if u == v:
            continue
        c = contract_edge(g, e)
        assert c.total_weight == g.total_weight
        assert c.m == g.m - 1
        # contracting a non-loop edge lowers the rank of E by exactly one
        assert rank(c, range(c.m)) == rank(g, range(g.m)) - 1
        assert component_count(c) == component_count(g)


def test_constructor_validation():
    with pytest.raises(ValueError):
        Multigraph(2, ((0, 2),))
    with pytest.raises(ValueError):
        Multigraph(2, (), (1,))
    with pytest.raises(ValueError):
        Multigraph(2, (), (1, 0))
