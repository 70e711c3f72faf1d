import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cagets.constructions import (etsl_tree, lets_b_dv_minus_2, lets_cycle_pendant,
                                  nets_two_copies)
from cagets.errors import MalformedInputError
from cagets.graph import INF, Graph, girth, subdivide
from cagets.registry import get_cage
from cagets.tanner import (Category, TannerGraph, check_degree_profile, classify,
                           format_tanner, is_variable_regular, normal_graph, parse_tanner,
                           read_tanner, tanner_to_dot, to_tanner, write_tanner)

from conftest import reference_classify, to_nx


def k4():
    return Graph(4, [(u, v) for u in range(4) for v in range(u + 1, 4)])


def test_k4_lets():
    t = to_tanner(subdivide(k4()))
    assert (t.variable_count, t.check_count) == (4, 6)
    cl = classify(t)
    assert (cl.a, cl.b, cl.category, cl.girth) == (4, 0, Category.LETS, 6)
    assert cl.n_even == 6 and cl.dv_profile == (3, 3, 3, 3)
    assert check_degree_profile(t) == (2,) * 6
    assert str(cl) == "a=4 b=0 LETS girth=6"


def test_triangle():
    t = to_tanner(subdivide(Graph(3, [(0, 1), (1, 2), (0, 2)])))
    assert (t.variable_count, t.check_count) == (3, 3)
    assert classify(t).girth == 6


def test_petersen_roundtrip():
    t = to_tanner(subdivide(get_cage(3, 5)))
    cl = classify(t)
    assert (cl.a, cl.b, cl.category, cl.girth) == (10, 0, Category.LETS, 10)
    assert nx.is_isomorphic(to_nx(normal_graph(t)), nx.petersen_graph())


def test_fig_examples():
    cl = classify(lets_b_dv_minus_2(3, 6).graph)
    assert (cl.a, cl.b, cl.category) == (5, 1, Category.LETS)
    cl = classify(nets_two_copies(3, 6).graph)
    assert (cl.a, cl.b, cl.category) == (8, 0, Category.NETS)


def test_tree_classification():
    cl = classify(etsl_tree(3, 5).graph)
    assert cl.category is Category.ETSL and cl.acyclic
    assert cl.etsl_type == "ETSL2" and cl.label == "ETSL(tree)"
    assert str(cl) == "a=3 b=5 ETSL(tree) girth=inf"
    assert check_degree_profile(etsl_tree(3, 5).graph) == (1, 1, 1, 1, 1, 2, 2)


def test_etsl_with_cycle():
    # a 4-cycle of variables plus a leaf variable hanging on a pendant
    t = TannerGraph(5, 10, [(0, 0), (1, 0), (1, 1), (2, 1), (2, 2), (3, 2), (3, 3), (0, 3),
                            (0, 4), (1, 5), (2, 6), (3, 7), (4, 4), (4, 8), (4, 9)])
    cl = classify(t)
    assert cl.category is Category.ETSL and cl.etsl_type == "ETSL1"
    assert cl.b == 5 and cl.girth == 8


def test_isolated_variable_rejected():
    with pytest.raises(MalformedInputError):
        classify(TannerGraph(2, 1, [(0, 0)]))


def test_tanner_rejects_bad_edges():
    with pytest.raises(MalformedInputError):
        TannerGraph(1, 1, [(0, 1)])
    with pytest.raises(MalformedInputError):
        TannerGraph(1, 1, [(1, 0)])
    with pytest.raises(MalformedInputError):
        TannerGraph(1, 1, [(0, 0), (0, 0)])


def test_variable_regular():
    t = to_tanner(subdivide(k4()))
    assert is_variable_regular(t, 3) and not is_variable_regular(t, 4)


def test_normal_graph_cycle():
    t = lets_cycle_pendant(3, 4).graph
    assert normal_graph(t) == Graph(4, [(0, 1), (1, 2), (2, 3), (0, 3)])


def test_normal_graph_rejects_nets_and_girth4():
    with pytest.raises(MalformedInputError, match="degree 4"):
        normal_graph(nets_two_copies(3, 6).graph)
    t = TannerGraph(2, 2, [(0, 0), (1, 0), (0, 1), (1, 1)])
    with pytest.raises(MalformedInputError, match="girth 4"):
        normal_graph(t)


@pytest.mark.parametrize("seed", range(30))
def test_normal_graph_halves_girth(seed):
    h = nx.random_regular_graph(3, 16, seed=seed)
    g = Graph(16, h.edges())
    t = to_tanner(subdivide(g))
    assert t.girth == 2 * girth(normal_graph(t))


def test_format_roundtrip(tmp_path):
    t = lets_b_dv_minus_2(3, 6).graph
    text = format_tanner(t, ["hello"])
    assert text.splitlines()[:2] == ["c hello", f"p tanner 5 8 {t.edge_count}"]
    assert parse_tanner(text) == t
    write_tanner(t, tmp_path / "t.txt")
    assert read_tanner(tmp_path / "t.txt") == t


@pytest.mark.parametrize("text", ["p tanner 1 1\n", "e 0 0\n", "p tanner 1 1 2\ne 0 0\n",
                                  "p tanner 1 1 1\ne 0\n", "p graph 1 0\n", ""])
def test_parse_errors(text):
    with pytest.raises(MalformedInputError):
        parse_tanner(text)


def test_dot_shapes():
    t = lets_b_dv_minus_2(3, 6).graph
    dot = tanner_to_dot(t)
    assert dot.count("shape=circle") == 5
    filled = dot.count("style=filled")
    assert filled == classify(t).n_even
    assert dot.count("shape=square") - filled == 1


@st.composite
def tanner_graphs(draw):
    nv = draw(st.integers(1, 8))
    nc = draw(st.integers(1, 12))
    edges = draw(st.sets(st.tuples(st.integers(0, nv - 1), st.integers(0, nc - 1)),
                         min_size=1, max_size=30))
    # give every variable at least one check
    edges |= {(v, draw(st.integers(0, nc - 1))) for v in range(nv)}
    return TannerGraph(nv, nc, edges)


@settings(max_examples=300, deadline=None)
@given(tanner_graphs())
def test_classifier_matches_reference(t):
    cl = classify(t)
    a, b, cat, g = reference_classify(t)
    assert (cl.a, cl.b, cl.category.value, cl.girth) == (a, b, cat, g)
    assert cl.n_even == sum(1 for d in t.check_degrees() if d >= 2 and d % 2 == 0)


@settings(max_examples=100, deadline=None)
@given(tanner_graphs())
def test_handshake_parity(t):
    cl = classify(t)
    assert (sum(t.variable_degrees()) - cl.b) % 2 == 0


def test_girth_acyclic():
    assert TannerGraph(2, 1, [(0, 0), (1, 0)]).girth == INF
