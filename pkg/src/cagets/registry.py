"""Cage sizes, concrete cages, good-graphs, and the good-graph builder.

Known cage orders n(r;g) are stored verbatim, including the entries that
are open (``None``). Concrete graphs come from three sources: edge-list
files shipped in ``data/`` (override the directory with the
``CAGETS_DATA_DIR`` environment variable), finite-geometry generators, and
complete bipartite graphs for girth 4.
"""

from __future__ import annotations

import enum
import os
from dataclasses import dataclass, field
from functools import lru_cache
from pathlib import Path

from .errors import MalformedInputError, NotAvailableError, PreconditionError
from .geometry import complete_bipartite, generate_gq_incidence, generate_pg_incidence
from .graph import Graph, girth, is_connected, read_graph

DATA_DIR_ENV = "CAGETS_DATA_DIR"

# n(r;g) for r = 3..7 and g = 3..12; None marks an open entry.
_GIRTHS = tuple(range(3, 13))
_ROWS = {
    3: (4, 6, 10, 14, 24, 30, 58, 70, 112, 126),
    4: (5, 8, 19, 26, 67, 80, 275, 384, None, 728),
    5: (6, 10, 30, 42, 152, 170, None, None, None, 2730),
    6: (7, 12, 40, 62, 294, 312, None, None, None, 7812),
    7: (8, 14, 50, 90, None, None, None, None, None, None),
}
CAGE_SIZES: dict[tuple[int, int], int | None] = {
    (r, g): n for r, row in _ROWS.items() for g, n in zip(_GIRTHS, row)
}

_EMBEDDED_CAGES = {
    (3, 3), (3, 4), (3, 5), (3, 7), (4, 3), (4, 5), (5, 3), (5, 5),
    (6, 3), (6, 5), (7, 3), (7, 5),
}


class Availability(enum.Enum):
    EMBEDDED = "embedded"
    GENERATED = "generated"
    VALUE_ONLY = "value-only"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class CageRecord:
    r: int
    g_cage: int
    n: int | None
    availability: Availability

    @property
    def materializable(self) -> bool:
        return self.availability in (Availability.EMBEDDED, Availability.GENERATED)


@dataclass(frozen=True)
class GoodGraphRecord:
    """An (r,s;g)-graph with ``t`` nodes of degree s (a good-graph when t = 1).

    ``n_prime`` is ``None`` when unknown and ``math.inf`` when no such graph
    exists.
    """

    r: int
    s: int
    g_cage: int
    n_prime: int | float | None
    t: int
    availability: Availability
    filename: str | None = field(default=None, repr=False)

    @property
    def materializable(self) -> bool:
        return self.availability in (Availability.EMBEDDED, Availability.GENERATED)


_GOOD_GRAPHS = {
    (5, 6, 3): GoodGraphRecord(5, 6, 3, 7, 1, Availability.EMBEDDED, "good_5_6_3.txt"),
    (5, 6, 4): GoodGraphRecord(5, 6, 4, None, 1, Availability.UNKNOWN),
    (5, 6, 5): GoodGraphRecord(5, 6, 5, 31, 1, Availability.VALUE_ONLY),
    (3, 4, 5): GoodGraphRecord(3, 4, 5, 13, 1, Availability.EMBEDDED, "good_3_4_5.txt"),
    (3, 4, 6): GoodGraphRecord(3, 4, 6, 18, 2, Availability.EMBEDDED, "graph_3_4_6.txt"),
    (3, 4, 8): GoodGraphRecord(3, 4, 8, 39, 3, Availability.VALUE_ONLY),
}


def moore_bound(r: int, g: int) -> int:
    """Classical lower bound on the order of an r-regular graph of girth g."""
    if r < 2 or g < 3:
        raise ValueError("moore_bound needs r >= 2 and g >= 3")
    if g % 2:
        return 1 + r * sum((r - 1) ** i for i in range((g - 3) // 2 + 1))
    return 2 * sum((r - 1) ** i for i in range(g // 2))


def cage_size(r: int, g: int) -> int | None:
    """Known n(r;g), or ``None`` when open or outside the stored table."""
    return CAGE_SIZES.get((r, g))


def cage_record(r: int, g: int) -> CageRecord:
    n = cage_size(r, g)
    if g == 4 and r >= 2:
        avail = Availability.GENERATED
        n = 2 * r
    elif (r, g) in _EMBEDDED_CAGES:
        avail = Availability.EMBEDDED
    elif g in (6, 8) and r - 1 in (2, 3, 4, 5):
        avail = Availability.GENERATED
    elif n is not None:
        avail = Availability.VALUE_ONLY
    else:
        avail = Availability.UNKNOWN
    return CageRecord(r, g, n, avail)


def data_dir() -> Path:
    env = os.environ.get(DATA_DIR_ENV)
    return Path(env) if env else Path(__file__).parent / "data"


@dataclass(frozen=True)
class ValidationReport:
    checks: dict

    @property
    def ok(self) -> bool:
        return all(self.checks.values())

    def failures(self) -> list[str]:
        return [k for k, v in self.checks.items() if not v]

    def __str__(self):
        return ", ".join(f"{k}={'pass' if v else 'FAIL'}" for k, v in self.checks.items())


def validate_cage(g: Graph, r: int, girth_claim: int, n_claim: int) -> ValidationReport:
    """Check order, r-regularity, exact girth and connectivity."""
    return ValidationReport({
        "node_count": g.node_count == n_claim,
        "regular": all(d == r for d in g.degrees()),
        "girth": girth(g) == girth_claim,
        "connected": is_connected(g),
    })


@lru_cache(maxsize=None)
def _load(name: str) -> Graph:
    path = data_dir() / name
    if not path.exists():
        raise NotAvailableError(f"data file {path} is missing")
    return read_graph(path)


@lru_cache(maxsize=None)
def _materialize(r: int, g: int) -> Graph:
    rec = cage_record(r, g)
    if rec.availability is Availability.EMBEDDED:
        graph = _load(f"cage_{r}_{g}.txt")
        report = validate_cage(graph, r, g, rec.n)
        if not report.ok:
            raise MalformedInputError(f"embedded ({r};{g})-cage failed validation: {report}")
        return graph
    if g == 4:
        return complete_bipartite(r)
    if g == 6:
        return generate_pg_incidence(r - 1)
    return generate_gq_incidence(r - 1)


def get_cage(r: int, g: int) -> Graph:
    """A concrete (r;g)-cage; raises :class:`NotAvailableError` otherwise."""
    rec = cage_record(r, g)
    if not rec.materializable:
        size = "unknown" if rec.n is None else str(rec.n)
        raise NotAvailableError(
            f"no ({r};{g})-cage graph is available ({rec.availability.value}, n={size})")
    return _materialize(r, g)


def good_graph_record(r: int, s: int, g: int) -> GoodGraphRecord:
    rec = _GOOD_GRAPHS.get((r, s, g))
    if rec is None:
        return GoodGraphRecord(r, s, g, None, 1, Availability.UNKNOWN)
    return rec


def good_graph_records() -> list[GoodGraphRecord]:
    return list(_GOOD_GRAPHS.values())


@lru_cache(maxsize=None)
def get_good_graph(r: int, s: int, g: int) -> Graph:
    """Materialize the registered (r,s;g)-graph, validating its degrees and girth."""
    rec = good_graph_record(r, s, g)
    if not rec.materializable:
        raise NotAvailableError(f"no ({r},{s};{g})-graph is available ({rec.availability.value})")
    graph = _load(rec.filename)
    degs = sorted(graph.degrees())
    expected = [r] * (graph.node_count - rec.t) + [s] * rec.t
    if graph.node_count != rec.n_prime or degs != expected or girth(graph) != g:
        raise MalformedInputError(f"embedded ({r},{s};{g})-graph failed validation")
    return graph


def build_good_graph(r_target: int, g_half: int) -> Graph:
    """Build a (2r-1, 2r; g_half)-good-graph from copies of the (2r-1; g_half)-cage.

    Take the cage minus its lexicographically smallest edge xy. On a cycle
    v_1 .. v_k (k = g_half) hang pendants u_2 .. u_k; join r-2 copies to
    each v_i (i >= 2), r-1 copies to each u_i and r-1 copies to v_1, where
    "join" links the host to both x and y of the copy. Node v_1 (index 0)
    ends with degree r_target + 1, every other node with r_target.
    """
    if r_target < 3 or r_target % 2 == 0:
        raise PreconditionError("r_target must be an odd integer >= 3")
    if g_half < 3:
        raise PreconditionError("g_half must be >= 3")
    r = (r_target + 1) // 2
    cage = get_cage(r_target, g_half)
    x, y = cage.edge_list()[0]
    base = cage.delete_edge(x, y)

    k = g_half
    cycle = list(range(k))                   # v_1 .. v_k
    pendants = list(range(k, 2 * k - 1))     # u_2 .. u_k
    edges = [(cycle[i], cycle[(i + 1) % k]) for i in range(k)]
    edges += [(cycle[i], pendants[i - 1]) for i in range(1, k)]
    hosts = [v for v in cycle[1:] for _ in range(r - 2)]
    hosts += [u for u in pendants for _ in range(r - 1)]
    hosts += [cycle[0]] * (r - 1)

    total = 2 * k - 1
    for host in hosts:
        edges.extend((total + u, total + v) for u, v in base.edges)
        edges.append((host, total + x))
        edges.append((host, total + y))
        total += base.node_count
    return Graph(total, edges)


def clear_caches() -> None:
    """Forget loaded graphs, e.g. after changing ``CAGETS_DATA_DIR``."""
    _load.cache_clear()
    _materialize.cache_clear()
    get_good_graph.cache_clear()
