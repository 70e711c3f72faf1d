"""Regenerate the embedded edge-list files under src/cagets/data/.

    python tools/make_cage_data.py
"""

from pathlib import Path

from cagets.geometry import complete_bipartite, complete_graph
from cagets.graph import Graph, format_graph

DATA = Path(__file__).resolve().parents[1] / "src" / "cagets" / "data"

# Found by tools/search_graphs.py (19-cycle seed); the (4;5)-cage is unique.
ROBERTSON = [
    (0, 1), (0, 18), (0, 13), (0, 5), (1, 2), (1, 10), (1, 15), (2, 3), (2, 7),
    (2, 12), (3, 4), (3, 14), (3, 17), (4, 5), (4, 11), (4, 8), (5, 6), (5, 16),
    (6, 7), (6, 10), (6, 14), (7, 8), (7, 18), (8, 9), (8, 15), (9, 10), (9, 17),
    (9, 13), (10, 11), (11, 18), (11, 12), (12, 13), (12, 16), (13, 14), (14, 15),
    (15, 16), (16, 17), (17, 18),
]

GOOD_3_4_5 = [
    (0, 10), (0, 1), (0, 2), (0, 3), (1, 6), (1, 7), (2, 4), (2, 5), (3, 8),
    (3, 11), (4, 9), (4, 7), (5, 12), (5, 6), (6, 11), (7, 8), (8, 12), (9, 10),
    (9, 11), (10, 12),
]

GRAPH_3_4_6 = [
    (0, 16), (0, 9), (0, 3), (0, 13), (1, 4), (1, 5), (1, 14), (1, 6), (2, 12),
    (2, 13), (2, 7), (3, 8), (3, 6), (4, 11), (4, 9), (5, 17), (5, 13), (6, 7),
    (7, 10), (8, 17), (8, 11), (9, 15), (10, 16), (10, 11), (12, 14), (12, 15),
    (14, 16), (15, 17),
]


def lcf(n, shifts, repeats):
    edges = {(i, (i + 1) % n) for i in range(n)}
    for i, s in enumerate(shifts * repeats):
        j = (i + s) % n
        edges.add((min(i, j), max(i, j)))
    return Graph(n, {(min(u, v), max(u, v)) for u, v in edges})


def petersen():
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, outer + spokes + inner)


def hoffman_singleton():
    """Five pentagons P_h and five pentagrams Q_i; vertex j of P_h ~ vertex h*i+j of Q_i."""
    P = lambda h, j: 5 * h + j  # noqa: E731
    Q = lambda i, j: 25 + 5 * i + j  # noqa: E731
    edges = []
    for h in range(5):
        for j in range(5):
            edges.append((P(h, j), P(h, (j + 1) % 5)))
            edges.append((Q(h, j), Q(h, (j + 2) % 5)))
            for i in range(5):
                edges.append((P(h, j), Q(i, (h * i + j) % 5)))
    return Graph(50, edges)


def without_petersens(k):
    """Delete P_0 u Q_0, ..., P_{k-1} u Q_{k-1}; each is a Petersen graph."""
    drop = [5 * h + j for h in range(k) for j in range(5)]
    drop += [25 + 5 * i + j for i in range(k) for j in range(5)]
    return hoffman_singleton().delete_nodes(drop)[0]


def good_5_6_3():
    """K7 minus a perfect matching of nodes 1..6: node 0 has degree 6, the rest 5."""
    k7 = complete_graph(7)
    return Graph(7, k7.edges - {(1, 2), (3, 4), (5, 6)})


FILES = {
    "cage_3_3.txt": (complete_graph(4), "(3;3)-cage K4"),
    "cage_3_4.txt": (complete_bipartite(3), "(3;4)-cage K3,3"),
    "cage_3_5.txt": (petersen(), "(3;5)-cage, Petersen graph"),
    "cage_3_7.txt": (lcf(24, [12, 7, -7], 8), "(3;7)-cage, McGee graph, LCF [12,7,-7]^8"),
    "cage_4_3.txt": (complete_graph(5), "(4;3)-cage K5"),
    "cage_4_5.txt": (Graph(19, ROBERTSON), "(4;5)-cage, Robertson graph"),
    "cage_5_3.txt": (complete_graph(6), "(5;3)-cage K6"),
    "cage_5_5.txt": (without_petersens(2), "(5;5)-cage: Hoffman-Singleton minus two Petersen subgraphs"),
    "cage_6_3.txt": (complete_graph(7), "(6;3)-cage K7"),
    "cage_6_5.txt": (without_petersens(1), "(6;5)-cage: Hoffman-Singleton minus a Petersen subgraph"),
    "cage_7_3.txt": (complete_graph(8), "(7;3)-cage K8"),
    "cage_7_5.txt": (hoffman_singleton(), "(7;5)-cage, Hoffman-Singleton graph"),
    "good_5_6_3.txt": (good_5_6_3(), "(5,6;3)-good-cage, 7 nodes"),
    "good_3_4_5.txt": (Graph(13, GOOD_3_4_5), "(3,4;5)-good-cage, 13 nodes"),
    "graph_3_4_6.txt": (Graph(18, GRAPH_3_4_6), "(3,4;6)-graph, 18 nodes, two of degree 4"),
}


def main():
    DATA.mkdir(parents=True, exist_ok=True)
    for name, (g, comment) in FILES.items():
        (DATA / name).write_text(format_graph(g, [comment]))
        print(name, g.node_count, g.edge_count)


if __name__ == "__main__":
    main()
