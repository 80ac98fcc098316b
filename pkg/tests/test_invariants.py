from fractions import Fraction

import networkx as nx
import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from gpoly import catalog
from gpoly import invariants as inv
from gpoly.census import partition_census, subset_census
from gpoly.errors import GuardExceeded, PreconditionError
from gpoly.generate import connected_simple_graphs, small_multigraphs
from gpoly.multigraph import Multigraph
from gpoly.polyring import Poly, make_var

P = Poly.parse


@st.composite
def multigraphs(draw, max_n=5, max_m=7):
    n = draw(st.integers(1, max_n))
    edges = draw(st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), max_size=max_m))
    weights = draw(st.lists(st.integers(1, 3), min_size=n, max_size=n))
    return Multigraph(n, tuple(edges), tuple(weights))


def _to_sympy(p: Poly, names: dict[str, sympy.Symbol]):
    expr = sympy.Integer(0)
    for mono, c in p.terms.items():
        term = sympy.Integer(c)
        for (family, _), e in mono:
            term *= names[family] ** e
        expr += term
    return sympy.expand(expr)


def _nx(g: Multigraph) -> nx.MultiGraph:
    h = nx.MultiGraph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


def test_tutte_matches_networkx_on_multigraphs():
    X, Y = sympy.symbols("x y")
    count = 0
    for g in small_multigraphs(3, 4):
        ours = _to_sympy(inv.tutte(g), {"X": X, "Y": Y})
        theirs = sympy.expand(nx.tutte_polynomial(_nx(g)).subs({sympy.Symbol("x"): X, sympy.Symbol("y"): Y}))
        assert ours == theirs, g.to_edge_list()
        count += 1
    assert count == 5 + 35 + 210


def test_chromatic_matches_networkx():
    lam = sympy.Symbol("lambda")
    for g in connected_simple_graphs(5, min_n=4):
        h = nx.Graph()
        h.add_nodes_from(range(g.n))
        h.add_edges_from(g.edges)
        theirs = sympy.expand(nx.chromatic_polynomial(h).subs(sympy.Symbol("x"), lam))
        assert _to_sympy(inv.chromatic(g), {"lambda": lam}) == theirs


def test_worked_values():
    K3 = catalog.triangle()
    assert inv.tutte(K3) == P("X^2 + X + Y")
    assert inv.chromatic(K3) == P("lambda^3 - 3*lambda^2 + 2*lambda")
    assert inv.polychromate(K3) == P("x[1]^3 + 3*x[1]*x[2]*y + x[3]*y^3")
    assert inv.u_poly(catalog.double_edge_with_loop()) == P("x[1]^2*y + x[2]*y^2 + x[2]*y")
    assert inv.stability(catalog.path2()) == P("p^3 - 2*p^2 + 1")
    assert inv.two_polymatroid(K3) == P("u^3 + v^3 + 3*u + 3*v")
    assert inv.v_function(catalog.single_loop()) == P("yk[1]")
    assert inv.v_function(catalog.double_edge_with_loop()) == P("yk[0]*yk[1] + yk[1] + yk[2]")


def test_tutte_symmetric_triangle_count():
    # 3 monochromatic colourings give 2^3, 18 give 2^1, 6 give 2^0
    K3 = catalog.triangle()
    assert inv.tutte_symmetric_oracle(K3, [1, 1, 1], 1) == 66
    ysym = inv.tutte_symmetric(K3, 3)
    ones = {v: 1 for v in ysym.variables()}
    assert ysym.evaluate(ones) == 66


def test_chromatic_symmetric_path():
    X = inv.chromatic_symmetric(catalog.path2(), 3)
    x = [make_var("x", i) for i in (1, 2, 3)]
    assert X.coefficient({x[0]: 1, x[1]: 1, x[2]: 1}) == 6
    assert X.coefficient({x[0]: 2, x[1]: 1}) == 1
    assert X.coefficient({x[0]: 3}) == 0
    assert X == inv.chromatic_symmetric(catalog.path2(), 3, method="from-u")
    assert inv.chromatic_symmetric(catalog.loop_at_end(), 3) == Poly()


def test_tutte_two_routes_on_multigraphs():
    for g in small_multigraphs(3, 4):
        assert inv.tutte(g) == inv.tutte(g, method="from-u")


def test_chromatic_sign_convention():
    # P = (-1)^r(E) lambda^k T(1 - lambda, 0); checked on a disconnected forest
    g = Multigraph(4, ((0, 1), (2, 3)))
    assert inv.chromatic_from_tutte(g) == inv.chromatic(g)
    assert inv.chromatic(g) == P("lambda^4 - 2*lambda^3 + lambda^2")


@settings(max_examples=40, deadline=None)
@given(multigraphs())
def test_numpy_and_python_census_agree(g):
    assert subset_census(g) == subset_census(g, method="python")
    assert inv.ubar(g) == inv.ubar(g, method="python")
    assert inv.wbar_expansion(g) == inv.wbar_expansion(g, method="python")
    assert inv.extended_polychromate(g) == inv.extended_polychromate(g, method="python")
    assert inv.polychromate(g) == inv.polychromate(g, method="python")


@settings(max_examples=40, deadline=None)
@given(multigraphs(max_n=4, max_m=5))
def test_recurrence_pivot_independence(g):
    expected = inv.wbar_expansion(g)
    assert inv.wbar_recurrence(g) == expected
    assert inv.wbar_recurrence(g, pivot="highest") == expected
    assert inv.v_function(g) == inv.v_function(g, method="from-ubar")


@settings(max_examples=30, deadline=None)
@given(multigraphs(max_n=4, max_m=5))
def test_unweighted_wbar_is_ubar(g):
    assert inv.wbar_expansion(g.unweighted()) == inv.ubar(g)


def test_census_chunks_and_workers_do_not_change_results():
    g = catalog.complete(5)
    base = subset_census(g)
    assert subset_census(g, chunk_bits=3) == base
    assert subset_census(g, jobs=2, chunk_bits=4) == base
    assert partition_census(g, max_rows=7) == partition_census(g)
    assert partition_census(g, jobs=2, max_rows=7) == partition_census(g)


def test_ybar_oracle_matches_expansion_for_weighted_points():
    g = catalog.loop_at_end()
    x = [Fraction(1, 2), Fraction(-2), Fraction(3, 7), Fraction(1)]
    t = [Fraction(2), Fraction(0), Fraction(-1, 3), Fraction(5)]
    assert inv.ybar_evaluate_oracle(g, x, t) == inv.ybar_coefficients(g).evaluate(x, t)


def test_guards():
    big = Multigraph(2, ((0, 1),) * 27)
    with pytest.raises(GuardExceeded):
        inv.ubar(big)
    with pytest.raises(GuardExceeded):
        inv.extended_polychromate(Multigraph(14))
    with pytest.raises(GuardExceeded):
        inv.ybar_evaluate_oracle(catalog.complete(8), [1] * 8, [1] * 8, limit=1000)


def test_preconditions():
    with pytest.raises(PreconditionError):
        inv.stability(catalog.loop_at_end())
    with pytest.raises(PreconditionError):
        inv.two_polymatroid(Multigraph(3, ((0, 1),)))
    with pytest.raises(PreconditionError):
        inv.two_polymatroid(catalog.single_loop())


def test_compute_registry():
    K3 = catalog.triangle()
    for name in inv.INVARIANTS:
        result = inv.compute(name, K3)
        assert result.name == name and result.provenance
    assert inv.compute("ubar", K3).value == inv.ubar(K3)
    with pytest.raises(KeyError):
        inv.compute("nope", K3)


def test_edgeless_and_single_vertex():
    assert inv.ubar(catalog.edgeless(3)) == P("z[1,0]^3")
    assert inv.u_poly(catalog.edgeless(1)) == P("x[1]")
    assert inv.tutte(catalog.edgeless(2)) == Poly.const(1)
    assert inv.chromatic(catalog.edgeless(2)) == P("lambda^2")
