"""Bipartite Tanner graphs and trapping-set classification.

Variables and checks are indexed separately, each from 0. For girth
computations they are packed into one graph with variables first.
"""

from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from pathlib import Path
from typing import Iterable

from .errors import MalformedInputError
from .graph import INF, Graph, SubdividedGraph, girth_of_adjacency


class Category(str, enum.Enum):
    LETS = "LETS"
    ETSL = "ETSL"
    NETS = "NETS"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class TannerGraph:
    """Bipartite graph with edges ``(variable, check)``."""

    variable_count: int
    check_count: int
    edges: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        if self.variable_count < 0 or self.check_count < 0:
            raise MalformedInputError("node counts must be non-negative")
        norm = set()
        count = 0
        for v, c in self.edges:
            v, c = int(v), int(c)
            count += 1
            if not 0 <= v < self.variable_count:
                raise MalformedInputError(f"variable {v} out of range")
            if not 0 <= c < self.check_count:
                raise MalformedInputError(f"check {c} out of range")
            norm.add((v, c))
        if len(norm) != count:
            raise MalformedInputError("parallel edges are not allowed")
        object.__setattr__(self, "edges", frozenset(norm))

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def edge_list(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    @cached_property
    def _adj(self):
        vn = [[] for _ in range(self.variable_count)]
        cn = [[] for _ in range(self.check_count)]
        for v, c in self.edges:
            vn[v].append(c)
            cn[c].append(v)
        return (tuple(tuple(sorted(x)) for x in vn),
                tuple(tuple(sorted(x)) for x in cn))

    @property
    def variable_adjacency(self) -> tuple[tuple[int, ...], ...]:
        return self._adj[0]

    @property
    def check_adjacency(self) -> tuple[tuple[int, ...], ...]:
        return self._adj[1]

    def variable_degrees(self) -> list[int]:
        return [len(x) for x in self._adj[0]]

    def check_degrees(self) -> list[int]:
        return [len(x) for x in self._adj[1]]

    def as_graph(self) -> Graph:
        """Plain graph with variable i at node i and check j at node nv + j."""
        nv = self.variable_count
        return Graph(nv + self.check_count, [(v, nv + c) for v, c in self.edges])

    @cached_property
    def girth(self) -> int | float:
        nv = self.variable_count
        adjacency = [tuple(nv + c for c in cs) for cs in self._adj[0]]
        adjacency += [vs for vs in self._adj[1]]
        # every cycle passes through a variable, so those are enough as BFS roots
        return girth_of_adjacency(adjacency, range(nv))


@dataclass(frozen=True)
class Classification:
    a: int
    b: int
    n_even: int
    category: Category
    girth: int | float
    dv_profile: tuple[int, ...]

    @property
    def acyclic(self) -> bool:
        return self.girth == INF

    @property
    def etsl_type(self) -> str | None:
        """``"ETSL1"`` (has a cycle) or ``"ETSL2"`` (tree) for ETSLs, else None."""
        if self.category is not Category.ETSL:
            return None
        return "ETSL2" if self.acyclic else "ETSL1"

    @property
    def label(self) -> str:
        if self.category is Category.ETSL and self.acyclic:
            return "ETSL(tree)"
        return self.category.value

    def __str__(self):
        g = "inf" if self.acyclic else str(self.girth)
        return f"a={self.a} b={self.b} {self.label} girth={g}"


def to_tanner(sg: SubdividedGraph) -> TannerGraph:
    """Old nodes become variables and subdivision nodes become checks."""
    vmap = {v: i for i, v in enumerate(sorted(sg.old_nodes))}
    cmap = {c: i for i, c in enumerate(sorted(sg.new_nodes))}
    edges = []
    for u, w in sg.graph.edges:
        if u in vmap:
            edges.append((vmap[u], cmap[w]))
        else:
            edges.append((vmap[w], cmap[u]))
    return TannerGraph(len(vmap), len(cmap), edges)


def classify(t: TannerGraph) -> Classification:
    vdeg = t.variable_degrees()
    if any(d == 0 for d in vdeg):
        raise MalformedInputError(f"variable {vdeg.index(0)} is isolated")
    cdeg = t.check_degrees()
    b = sum(1 for d in cdeg if d % 2)
    n_even = sum(1 for d in cdeg if d >= 2 and d % 2 == 0)
    if any(d >= 3 for d in cdeg):
        cat = Category.NETS
    else:
        leafless = all(
            sum(1 for c in cs if cdeg[c] == 2) >= 2 for cs in t.variable_adjacency)
        cat = Category.LETS if leafless else Category.ETSL
    return Classification(t.variable_count, b, n_even, cat, t.girth, tuple(sorted(vdeg)))


def is_variable_regular(t: TannerGraph, dv: int) -> bool:
    return all(d == dv for d in t.variable_degrees())


def check_degree_profile(t: TannerGraph) -> tuple[int, ...]:
    """Check degrees as a sorted tuple."""
    return tuple(sorted(t.check_degrees()))


def normal_graph(t: TannerGraph) -> Graph:
    """Contract each degree-2 check to an edge and drop degree-1 checks."""
    edges = set()
    for c, vs in enumerate(t.check_adjacency):
        if len(vs) >= 3:
            raise MalformedInputError(f"check {c} has degree {len(vs)}; not an elementary structure")
        if len(vs) == 2:
            if vs in edges:
                raise MalformedInputError(
                    f"variables {vs[0]} and {vs[1]} share two checks (girth 4)")
            edges.add(vs)
    return Graph(t.variable_count, edges)


# -- edge-list text format ---------------------------------------------------

def format_tanner(t: TannerGraph, comments: Iterable[str] = ()) -> str:
    lines = [f"c {c}" for c in comments]
    lines.append(f"p tanner {t.variable_count} {t.check_count} {t.edge_count}")
    lines.extend(f"e {v} {c}" for v, c in t.edge_list())
    return "\n".join(lines) + "\n"


def parse_tanner(text: str) -> TannerGraph:
    """Parse the ``p tanner <nv> <nc> <ne>`` / ``e <v> <c>`` format."""
    header = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        parts = raw.split()
        if not parts or parts[0] == "c":
            continue
        try:
            if parts[0] == "p":
                if header is not None or len(parts) != 5 or parts[1] != "tanner":
                    raise ValueError
                header = tuple(int(x) for x in parts[2:])
            elif parts[0] == "e":
                if header is None or len(parts) != 3:
                    raise ValueError
                edges.append((int(parts[1]), int(parts[2])))
            else:
                raise ValueError
        except ValueError:
            raise MalformedInputError(f"line {lineno}: cannot parse {raw!r}") from None
    if header is None:
        raise MalformedInputError("missing 'p tanner' header")
    if len(edges) != header[2]:
        raise MalformedInputError(f"header declares {header[2]} edges, found {len(edges)}")
    return TannerGraph(header[0], header[1], edges)


def read_tanner(path: str | Path) -> TannerGraph:
    return parse_tanner(Path(path).read_text())


def write_tanner(t: TannerGraph, path: str | Path, comments: Iterable[str] = ()) -> None:
    Path(path).write_text(format_tanner(t, comments))


def tanner_to_dot(t: TannerGraph, name: str = "T") -> str:
    """DOT text: variables are circles, satisfied checks filled squares,
    unsatisfied (odd-degree) checks empty squares."""
    lines = [f"graph {name} {{"]
    lines.extend(f"  v{v} [shape=circle];" for v in range(t.variable_count))
    for c, d in enumerate(t.check_degrees()):
        if d % 2:
            lines.append(f"  c{c} [shape=square, label=\"\"];")
        else:
            lines.append(f"  c{c} [shape=square, label=\"\", style=filled, fillcolor=black];")
    lines.extend(f"  v{v} -- c{c};" for v, c in t.edge_list())
    lines.append("}")
    return "\n".join(lines) + "\n"
