"""Incidence graphs of small finite geometries.

The point-line incidence graph of PG(2, q) is a (q+1; 6)-cage and that of
the symplectic generalized quadrangle W(q) is a (q+1; 8)-cage.
"""

from __future__ import annotations

from itertools import product

from .gf import GF, field
from .graph import Graph

SUPPORTED_ORDERS = (2, 3, 4, 5)


def _normalize(F: GF, v):
    for a in v:
        if a:
            inv = F.inv(a)
            return tuple(F.mul(inv, x) for x in v)
    raise ValueError("zero vector has no projective point")


def projective_points(F: GF, dim: int) -> list[tuple[int, ...]]:
    """Points of PG(dim-1, q) as normalized vectors (first nonzero entry 1)."""
    pts = set()
    for v in product(range(F.q), repeat=dim):
        if any(v):
            pts.add(_normalize(F, v))
    return sorted(pts)


def _check_order(q):
    if q not in SUPPORTED_ORDERS:
        raise ValueError(f"unsupported field order {q}; expected one of {SUPPORTED_ORDERS}")


def generate_pg_incidence(q: int) -> Graph:
    """Point-line incidence graph of the projective plane of order ``q``.

    Points are nodes ``0 .. N-1`` and lines ``N .. 2N-1`` with N = q^2+q+1.
    """
    _check_order(q)
    F = field(q)
    pts = projective_points(F, 3)
    n = len(pts)
    # lines are points of the dual plane: p on l iff p . l = 0
    edges = [(i, n + j) for i, p in enumerate(pts) for j, l in enumerate(pts)
             if F.dot(p, l) == 0]
    return Graph(2 * n, edges)


def _symplectic(F: GF, x, y) -> int:
    a = F.sub(F.mul(x[0], y[1]), F.mul(x[1], y[0]))
    b = F.sub(F.mul(x[2], y[3]), F.mul(x[3], y[2]))
    return F.add(a, b)


def generate_gq_incidence(q: int) -> Graph:
    """Incidence graph of W(q): points of PG(3, q) vs. totally isotropic lines."""
    _check_order(q)
    F = field(q)
    pts = projective_points(F, 4)
    index = {p: i for i, p in enumerate(pts)}
    lines = set()
    for i, p in enumerate(pts):
        for r in pts[i + 1:]:
            if _symplectic(F, p, r) != 0:
                continue
            span = frozenset(
                index[_normalize(F, tuple(F.add(F.mul(a, x), F.mul(b, y)) for x, y in zip(p, r)))]
                for a in range(q) for b in range(q) if a or b
            )
            lines.add(span)
    lines = sorted(sorted(l) for l in lines)
    n = len(pts)
    edges = [(p, n + j) for j, line in enumerate(lines) for p in line]
    return Graph(n + len(lines), edges)


def complete_graph(n: int) -> Graph:
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def complete_bipartite(r: int) -> Graph:
    """K_{r,r}: the (r; 4)-cage."""
    return Graph(2 * r, [(u, r + v) for u in range(r) for v in range(r)])
