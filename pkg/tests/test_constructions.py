import itertools

import networkx as nx
import pytest

from cagets import constructions as C
from cagets.bounds import best_upper, class_exists, upper_rules
from cagets.errors import (InternalInconsistencyError, NotAvailableError, ParityError,
                           PreconditionError)
from cagets.graph import INF, Graph
from cagets.registry import build_good_graph, get_cage, get_good_graph
from cagets.tanner import Category, classify, normal_graph, parse_tanner

from conftest import reference_classify, to_nx

LETS, ETSL, NETS = Category.LETS, Category.ETSL, Category.NETS


def cert(w):
    cl = classify(w.graph)
    return cl.a, cl.b, cl.category


@pytest.mark.parametrize("fn,args,expected", [
    (C.lets_b0, (3, 6), (4, 0, LETS)),
    (C.lets_b0, (4, 6), (5, 0, LETS)),
    (C.lets_b0, (3, 10), (10, 0, LETS)),
    (C.lets_b_dv_minus_2, (3, 6), (5, 1, LETS)),
    (C.lets_b_dv_minus_2, (3, 10), (11, 1, LETS)),
    (C.lets_b_dv_minus_2, (4, 6), (6, 2, LETS)),
    (C.lets_b_dv, (3, 6), (3, 3, LETS)),
    (C.lets_b_dv, (4, 6), (4, 4, LETS)),
    (C.lets_b_dv, (5, 8), (9, 5, LETS)),
    (C.lets_b_even, (3, 6, 2), (4, 2, LETS)),
    (C.lets_b_even, (4, 6, 2), (5, 2, LETS)),
    (C.lets_b_even, (5, 8, 4), (10, 4, LETS)),
    (C.lets_b_2dv_minus_2, (3, 8), (4, 4, LETS)),
    (C.lets_b_2dv_minus_2, (3, 10), (8, 4, LETS)),
    (C.lets_b_2dv_minus_2, (4, 8), (6, 6, LETS)),
    (C.lets_b_dv_plus_2, (3, 12), (13, 5, LETS)),
    (C.lets_b_dv_plus_2, (4, 6), (4, 6, LETS)),
    (C.lets_cycle_pendant, (3, 4), (4, 4, LETS)),
    (C.lets_cycle_pendant, (3, 5), (5, 5, LETS)),
    (C.lets_cycle_pendant, (3, 3), (3, 3, LETS)),
    (C.etsl_tree, (3, 5), (3, 5, ETSL)),
    (C.etsl_tree, (4, 6), (2, 6, ETSL)),
    (C.etsl_tree, (3, 3), (1, 3, ETSL)),
    (C.nets_two_copies, (3, 6), (8, 0, NETS)),
    (C.nets_two_copies, (3, 8), (12, 0, NETS)),
    (C.nets_two_copies, (5, 8), (20, 0, NETS)),
    (C.nets_b0_merge, (3, 6), (8, 0, NETS)),
    (C.nets_b0_merge, (3, 8), (12, 0, NETS)),
    (C.nets_b0_merge, (4, 6), (17, 0, NETS)),
    (C.nets_star_merge, (4, 6, 0), (7, 0, NETS)),
    (C.nets_star_merge, (3, 6, 1), (5, 1, NETS)),
    (C.nets_star_merge, (6, 6, 0), (11, 0, NETS)),
    (C.nets_iii_a, (3, 6), (6, 4, NETS)),
    (C.nets_iii_a, (3, 8), (8, 4, NETS)),
    (C.nets_iii_a, (4, 6), (7, 6, NETS)),
    (C.nets_iii_b, (3, 6), (5, 3, NETS)),
    (C.nets_iii_b, (5, 6), (7, 5, NETS)),
    (C.nets_iii_b, (4, 6), (6, 4, NETS)),
    (C.nets_iii_c, (3, 6), (5, 5, NETS)),
    (C.nets_iii_c, (3, 8), (7, 5, NETS)),
    (C.nets_iii_c, (4, 6), (6, 6, NETS)),
    (C.nets_iii_d, (3, 6), (6, 2, NETS)),
    (C.nets_iii_d, (3, 10), (14, 2, NETS)),
    (C.nets_iii_d, (5, 6), (10, 4, NETS)),
    (C.fact3_nets_b2_dv5, (6,), (12, 2, NETS)),
    (C.fact3_nets_b2_dv5, (8,), (20, 2, NETS)),
    (C.fact3_nets_b2_dv5, (12,), (84, 2, NETS)),
])
def test_construction_examples(fn, args, expected):
    w = fn(*args)
    assert cert(w) == expected
    assert (w.claimed_a, w.claimed_b, w.claimed_category) == expected


def test_petersen_witness():
    w = C.lets_b0(3, 10)
    assert w.graph.girth == 10
    assert nx.is_isomorphic(to_nx(normal_graph(w.graph)), nx.petersen_graph())


def test_cycle_pendant_girth():
    assert C.lets_cycle_pendant(3, 4).graph.girth == 8
    assert C.lets_cycle_pendant(3, 5).graph.girth == 10


@pytest.mark.parametrize("inner,dv,g,expected", [
    (C.lets_b_dv_minus_2(3, 6), 3, 6, (6, 2)),
    (C.lets_b_dv_minus_2(3, 10), 3, 10, (12, 2)),
    (C.fact1_lets_b1(6), 5, 6, (8, 4)),
])
def test_leaf_extension(inner, dv, g, expected):
    w = C.etsl_from_lets(inner)
    cl = w.verify()
    assert (cl.a, cl.b, cl.category) == (*expected, ETSL)
    assert cl.etsl_type == "ETSL1"
    assert w.provenance.startswith("leaf-extension<-")


def test_fact1():
    w = C.fact1_lets_b1(6)
    assert cert(w) == (7, 1, LETS) and w.provenance == "good-graph-cut"
    w = C.fact1_lets_b1(6, source=build_good_graph(5, 3))
    assert cert(w) == (53, 1, LETS) and w.provenance.endswith("(given)")
    with pytest.raises(NotAvailableError):
        C.fact1_lets_b1(10)
    with pytest.raises(PreconditionError):
        C.fact1_lets_b1(6, source=get_cage(5, 3))


def test_fact1_fallback():
    w = C.fact1_lets_b1(8, allow_fallback=True)
    assert cert(w) == (117, 1, LETS) and w.graph.girth >= 8
    assert w.provenance.endswith("(built)")


@pytest.mark.parametrize("key,g,t,expected_a", [((3, 4, 5), 8, 1, 12), ((3, 4, 6), 10, 2, 18)])
def test_fact2(key, g, t, expected_a):
    w = C.fact2_nets_b0_dv3(g, source=get_good_graph(*key), t=t)
    cl = w.verify()
    assert (cl.a, cl.b, cl.category) == (expected_a, 0, NETS)
    assert cl.girth >= g
    assert C.fact2_nets_b0_dv3(g).graph == w.graph


def test_fact2_preconditions():
    with pytest.raises(NotAvailableError):
        C.fact2_nets_b0_dv3(14)
    with pytest.raises(PreconditionError):
        C.fact2_nets_b0_dv3(8, source=get_good_graph(3, 4, 5), t=2)
    with pytest.raises(PreconditionError):
        C.fact2_nets_b0_dv3(8, source=get_cage(3, 5))


def test_preconditions():
    with pytest.raises(PreconditionError):
        C.lets_b_dv_plus_2(3, 8)
    with pytest.raises(PreconditionError):
        C.lets_b_2dv_minus_2(3, 6)
    with pytest.raises(PreconditionError):
        C.lets_b_even(3, 6, 3)
    with pytest.raises(PreconditionError):
        C.etsl_tree(4, 5)
    with pytest.raises(PreconditionError):
        C.etsl_tree(3, 2)
    with pytest.raises(PreconditionError):
        C.etsl_from_lets(C.lets_b0(3, 6))
    with pytest.raises(PreconditionError):
        C.etsl_from_lets(C.nets_iii_b(3, 6))
    with pytest.raises(ParityError):
        C.nets_star_merge(3, 6, 0)
    with pytest.raises(PreconditionError):
        C.nets_iii_d(4, 6)
    with pytest.raises(PreconditionError):
        C.lets_b0(3, 7)
    with pytest.raises(PreconditionError):
        C.lets_b0(2, 6)
    with pytest.raises(NotAvailableError):
        C.lets_b0(4, 14)


def test_verify_catches_false_claims():
    w = C.lets_b0(3, 6)
    bad = C.Witness(w.graph, 4, 1, LETS, 3, 6, "bogus")
    with pytest.raises(InternalInconsistencyError, match="bogus"):
        bad.verify()
    with pytest.raises(InternalInconsistencyError, match="girth"):
        C.Witness(w.graph, 4, 0, LETS, 3, 8, "x").verify()
    with pytest.raises(InternalInconsistencyError, match="variable degrees"):
        C.Witness(w.graph, 4, 0, LETS, 4, 6, "x").verify()


def test_certificate_text():
    w = C.lets_b0(3, 6)
    assert w.certificate == "(4,0) LETS dv=3 girth>=6 via cage"
    text = w.to_text()
    assert text.startswith("c certificate (4,0) LETS")
    assert parse_tanner(text) == w.graph
    assert C.etsl_tree(3, 5).certificate.endswith("girth>=inf via tree")


def test_deterministic():
    a = C.build_witness("nets", 3, 8, 0)
    b = C.build_witness("nets", 3, 8, 0)
    assert a.to_text() == b.to_text()


def test_build_witness():
    w = C.build_witness("lets", 3, 10, 0)
    assert (w.claimed_a, w.provenance) == (10, "cage")
    w = C.build_witness("etsl", 3, 10, 2)
    assert (w.claimed_a, w.claimed_b, w.claimed_category) == (12, 2, ETSL)
    with pytest.raises(ParityError):
        C.build_witness("lets", 4, 6, 3)
    with pytest.raises(NotAvailableError):
        C.build_witness("lets", 4, 14, 0)


def test_build_rule():
    with pytest.raises(PreconditionError):
        C.build_rule("no-such-rule", 3, 6, 0)
    w = C.build_rule("tree", 3, 6, 5)
    assert w.girth_floor == 6 and w.claimed_a == 3
    # a cycle of length 3 has girth 6 only
    with pytest.raises(PreconditionError):
        C.build_rule("pendant-cycle", 3, 8, 3)


# -- sweep over every applicable rule ----------------------------------------

def _sweep_cases():
    for cat, dv, g, b in itertools.product((LETS, ETSL, NETS), range(3, 8),
                                           range(6, 17, 2), range(0, 8)):
        if not any(class_exists(dv, a, b) for a in (1, 2)):
            continue
        for rule in upper_rules(cat, dv, g, b):
            yield cat, dv, g, b, rule


SWEEP = list(_sweep_cases())


def test_sweep_is_large():
    assert len(SWEEP) > 400


@pytest.mark.parametrize("cat,dv,g,b,rule", SWEEP,
                         ids=[f"{c.value}-{dv}-{g}-{b}-{r.provenance}" for c, dv, g, b, r in SWEEP])
def test_sweep(cat, dv, g, b, rule):
    try:
        w = C.build_rule(rule.provenance, dv, g, b)
    except NotAvailableError:
        pytest.skip("base graph not materializable")
    cl = w.verify()
    assert (cl.a, cl.b, cl.category) == (w.claimed_a, b, cat)
    assert cl.girth >= g
    if rule.value is not None:
        assert cl.a == rule.value
    if cat is not NETS:
        assert all(d <= 2 for d in w.graph.check_degrees())
    if w.graph.variable_count <= 20:
        a, rb, rcat, rg = reference_classify(w.graph)
        assert (a, rb, rcat, rg) == (cl.a, cl.b, cl.category.value, cl.girth)


@pytest.mark.parametrize("dv,b", [(3, 1), (3, 2), (4, 2), (4, 4), (5, 1), (5, 3), (6, 2)])
def test_parity_of_witnesses(dv, b):
    for g in (6, 8):
        for cat in (LETS, NETS):
            try:
                w = C.build_witness(cat, dv, g, b)
            except (NotAvailableError, ParityError):
                continue
            assert class_exists(dv, w.claimed_a, w.claimed_b)


@pytest.mark.parametrize("cat,dv,g,b", [(LETS, 3, 14, 0), (NETS, 3, 8, 0), (ETSL, 3, 8, 2),
                                        (NETS, 5, 6, 2), (LETS, 4, 8, 6)])
def test_best_witness_matches_best_upper(cat, dv, g, b):
    assert C.build_witness(cat, dv, g, b).claimed_a == best_upper(cat, dv, g, b).value


def test_tree_girth_infinite():
    assert C.etsl_tree(5, 11).graph.girth == INF
    assert classify(C.etsl_tree(5, 11).graph).a == 3


def test_graph_import_unused_guard():
    # witnesses never share mutable state with the registry cache
    before = get_cage(3, 5)
    C.lets_b_dv(3, 10)
    assert get_cage(3, 5) == before and isinstance(before, Graph)
