"""Independent reference implementations used as test oracles."""

import itertools

import networkx as nx

from cagets.graph import Graph
from cagets.tanner import TannerGraph


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.node_count))
    h.add_edges_from(g.edges)
    return h


def tanner_to_nx(t: TannerGraph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(("v", i) for i in range(t.variable_count))
    h.add_nodes_from(("c", j) for j in range(t.check_count))
    h.add_edges_from((("v", v), ("c", c)) for v, c in t.edges)
    return h


def brute_girth(n, edges):
    """Shortest cycle by trying every ordered node sequence (tiny graphs only)."""
    adj = {(min(u, v), max(u, v)) for u, v in edges}
    best = float("inf")
    for k in range(3, n + 1):
        for cyc in itertools.permutations(range(n), k):
            if cyc[0] != min(cyc):
                continue
            if all((min(cyc[i], cyc[(i + 1) % k]), max(cyc[i], cyc[(i + 1) % k])) in adj
                   for i in range(k)):
                return k
    return best


def reference_classify(t: TannerGraph):
    """Direct scan of the definitions, on a networkx copy."""
    h = tanner_to_nx(t)
    cdeg = {j: h.degree(("c", j)) for j in range(t.check_count)}
    b = sum(1 for d in cdeg.values() if d % 2 == 1)
    if any(d > 2 for d in cdeg.values()):
        cat = "NETS"
    else:
        cat = "LETS"
        for i in range(t.variable_count):
            sat = [c for _, c in h.edges(("v", i)) if cdeg[c[1]] == 2]
            if len(sat) < 2:
                cat = "ETSL"
    try:
        g = nx.girth(h)
    except nx.NetworkXError:
        g = float("inf")
    return t.variable_count, b, cat, g
