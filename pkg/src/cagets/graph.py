"""Simple undirected graphs, girth, and edge subdivision.

Nodes are dense integer indices ``0 .. node_count - 1``. Graphs are
immutable; operations that remove nodes return a compact re-indexed graph
together with the old-to-new index map.
"""

from __future__ import annotations

import math
from array import array
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from pathlib import Path
from typing import Iterable, Mapping

from . import _kernels
from .errors import MalformedInputError

INF = math.inf
"""Girth of an acyclic graph."""


def _csr(adjacency):
    indptr = array("i", [0])
    indices = array("i")
    for nbrs in adjacency:
        indices.extend(nbrs)
        indptr.append(len(indices))
    return indptr, indices


def girth_of_adjacency(adjacency, sources=None):
    """Shortest cycle length of a graph given as a neighbour list, or ``INF``."""
    indptr, indices = _csr(adjacency)
    if sources is None:
        src = array("i", range(len(adjacency)))
    else:
        src = array("i", sources)
    best = _kernels.girth_csr(indptr, indices, src)
    return INF if best < 0 else best


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph on nodes ``0 .. node_count - 1``.

    ``edges`` may be given as any iterable of pairs; it is stored as a
    frozenset of ``(u, v)`` tuples with ``u < v``. Self-loops, repeated
    pairs and out-of-range endpoints raise :class:`MalformedInputError`.
    """

    node_count: int
    edges: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        if self.node_count < 0:
            raise MalformedInputError("node_count must be non-negative")
        norm = set()
        count = 0
        for u, v in self.edges:
            u, v = int(u), int(v)
            count += 1
            if u == v:
                raise MalformedInputError(f"self-loop at node {u}")
            if not (0 <= u < self.node_count and 0 <= v < self.node_count):
                raise MalformedInputError(f"edge ({u}, {v}) out of range")
            norm.add((u, v) if u < v else (v, u))
        if len(norm) != count:
            raise MalformedInputError("parallel edges are not allowed")
        object.__setattr__(self, "edges", frozenset(norm))

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def edge_list(self) -> list[tuple[int, int]]:
        """Edges in lexicographic order (the canonical order for subdivision)."""
        return sorted(self.edges)

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        nbrs = [[] for _ in range(self.node_count)]
        for u, v in self.edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        return tuple(tuple(sorted(x)) for x in nbrs)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def degrees(self) -> list[int]:
        return [len(x) for x in self.adjacency]

    def has_edge(self, u: int, v: int) -> bool:
        return ((u, v) if u < v else (v, u)) in self.edges

    def delete_nodes(self, nodes: Iterable[int]) -> tuple["Graph", dict[int, int]]:
        """Remove ``nodes``; return the compacted graph and the old->new map."""
        gone = set(nodes)
        mapping = {}
        for v in range(self.node_count):
            if v not in gone:
                mapping[v] = len(mapping)
        edges = [(mapping[u], mapping[v]) for u, v in self.edges
                 if u in mapping and v in mapping]
        return Graph(len(mapping), edges), mapping

    def delete_edge(self, u: int, v: int) -> "Graph":
        e = (u, v) if u < v else (v, u)
        if e not in self.edges:
            raise MalformedInputError(f"no edge ({u}, {v})")
        return Graph(self.node_count, self.edges - {e})

    def relabel(self, mapping: Mapping[int, int], node_count: int | None = None) -> "Graph":
        n = self.node_count if node_count is None else node_count
        return Graph(n, [(mapping[u], mapping[v]) for u, v in self.edges])


def disjoint_union(*graphs: Graph) -> tuple[Graph, list[int]]:
    """Union of graphs with shifted labels; also returns each graph's offset."""
    offsets = []
    edges = []
    total = 0
    for g in graphs:
        offsets.append(total)
        edges.extend((u + total, v + total) for u, v in g.edges)
        total += g.node_count
    return Graph(total, edges), offsets


def girth(g: Graph) -> int | float:
    """Length of the shortest cycle of ``g``; ``INF`` when ``g`` is a forest."""
    return girth_of_adjacency(g.adjacency)


def is_regular(g: Graph, r: int) -> bool:
    """True iff every node has degree exactly ``r``."""
    return all(len(x) == r for x in g.adjacency)


def degree_sequence(g: Graph) -> tuple[int, ...]:
    """Node degrees as a sorted tuple (a multiset)."""
    return tuple(sorted(g.degrees()))


def is_connected(g: Graph) -> bool:
    if g.node_count == 0:
        return True
    seen = {0}
    queue = deque([0])
    while queue:
        u = queue.popleft()
        for w in g.adjacency[u]:
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return len(seen) == g.node_count


def distances_from(g: Graph, source: int) -> list[int | float]:
    dist: list[int | float] = [INF] * g.node_count
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in g.adjacency[u]:
            if dist[w] == INF:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


@dataclass(frozen=True)
class SubdividedGraph:
    """``G^{1/2}``: every edge of the source replaced by a path of length two.

    ``old_nodes`` keep their original indices; the new node for the i-th
    edge in lexicographic order is ``n + i``.
    """

    graph: Graph
    old_nodes: frozenset
    new_nodes: frozenset

    def __post_init__(self):
        if self.old_nodes & self.new_nodes:
            raise MalformedInputError("old and new node sets overlap")
        if len(self.old_nodes) + len(self.new_nodes) != self.graph.node_count:
            raise MalformedInputError("old/new nodes must cover the graph")
        for w in self.new_nodes:
            if self.graph.degree(w) != 2:
                raise MalformedInputError(f"subdivision node {w} must have degree 2")
        for u, v in self.graph.edges:
            if (u in self.new_nodes) == (v in self.new_nodes):
                raise MalformedInputError(f"edge ({u}, {v}) does not join old to new")


def subdivide(g: Graph) -> SubdividedGraph:
    """Subdivide every edge of ``g`` once."""
    n = g.node_count
    edges = []
    for i, (u, v) in enumerate(g.edge_list()):
        w = n + i
        edges.append((u, w))
        edges.append((v, w))
    new = frozenset(range(n, n + g.edge_count))
    return SubdividedGraph(Graph(n + g.edge_count, edges), frozenset(range(n)), new)


# -- edge-list text format ---------------------------------------------------

def format_graph(g: Graph, comments: Iterable[str] = ()) -> str:
    lines = [f"c {c}" for c in comments]
    lines.append(f"p graph {g.node_count} {g.edge_count}")
    lines.extend(f"e {u} {v}" for u, v in g.edge_list())
    return "\n".join(lines) + "\n"


def parse_graph(text: str) -> Graph:
    """Parse the ``p graph <n> <m>`` / ``e <u> <v>`` edge-list format."""
    header = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        parts = raw.split()
        if not parts or parts[0] == "c":
            continue
        try:
            if parts[0] == "p":
                if header is not None or len(parts) != 4 or parts[1] != "graph":
                    raise ValueError
                header = (int(parts[2]), int(parts[3]))
            elif parts[0] == "e":
                if header is None or len(parts) != 3:
                    raise ValueError
                edges.append((int(parts[1]), int(parts[2])))
            else:
                raise ValueError
        except ValueError:
            raise MalformedInputError(f"line {lineno}: cannot parse {raw!r}") from None
    if header is None:
        raise MalformedInputError("missing 'p graph' header")
    if len(edges) != header[1]:
        raise MalformedInputError(f"header declares {header[1]} edges, found {len(edges)}")
    return Graph(header[0], edges)


def read_graph(path: str | Path) -> Graph:
    return parse_graph(Path(path).read_text())


def write_graph(g: Graph, path: str | Path, comments: Iterable[str] = ()) -> None:
    Path(path).write_text(format_graph(g, comments))


def graph_to_dot(g: Graph, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    lines.extend(f"  {v};" for v in range(g.node_count))
    lines.extend(f"  {u} -- {v};" for u, v in g.edge_list())
    lines.append("}")
    return "\n".join(lines) + "\n"
