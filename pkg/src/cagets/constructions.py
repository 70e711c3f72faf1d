"""Explicit trapping-set constructions from cages and good-graphs.

Every function returns a :class:`Witness` that has already been checked by
:func:`cagets.tanner.classify`; a mismatch raises
:class:`InternalInconsistencyError`. All node choices are deterministic
(lowest admissible index). "Base" means the Tanner graph of the subdivided
cage: variable i is cage node i, check j is the j-th cage edge in
lexicographic order.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .errors import (InternalInconsistencyError, NotAvailableError, ParityError,
                     PreconditionError)
from .graph import INF, Graph, disjoint_union, subdivide
from .registry import build_good_graph, get_cage, get_good_graph, good_graph_record
from .tanner import (Category, Classification, TannerGraph, classify, format_tanner,
                     is_variable_regular, to_tanner)


@dataclass(frozen=True)
class Witness:
    graph: TannerGraph
    claimed_a: int
    claimed_b: int
    claimed_category: Category
    dv: int
    girth_floor: int | float
    provenance: str

    def verify(self) -> Classification:
        """Classify the graph and confirm the claimed certificate."""
        cl = classify(self.graph)
        problems = []
        if (cl.a, cl.b, cl.category) != (self.claimed_a, self.claimed_b, self.claimed_category):
            problems.append(f"classified as ({cl.a},{cl.b}) {cl.category}")
        if not is_variable_regular(self.graph, self.dv):
            problems.append(f"variable degrees {sorted(set(cl.dv_profile))} != {self.dv}")
        if cl.girth < self.girth_floor:
            problems.append(f"girth {cl.girth} < {self.girth_floor}")
        if problems:
            raise InternalInconsistencyError(
                f"{self.provenance}: claimed {self.certificate}, but " + "; ".join(problems))
        return cl

    @property
    def certificate(self) -> str:
        g = "inf" if self.girth_floor == INF else str(self.girth_floor)
        return (f"({self.claimed_a},{self.claimed_b}) {self.claimed_category} "
                f"dv={self.dv} girth>={g} via {self.provenance}")

    def to_text(self) -> str:
        return format_tanner(self.graph, [f"certificate {self.certificate}"])


class _Builder:
    """Mutable bipartite graph with stable ids, compacted on :meth:`build`."""

    def __init__(self, t: TannerGraph | None = None):
        self.vn: dict[int, set[int]] = {}
        self.cn: dict[int, set[int]] = {}
        self._next_v = self._next_c = 0
        if t is not None:
            for v in range(t.variable_count):
                self.vn[v] = set()
            for c in range(t.check_count):
                self.cn[c] = set()
            self._next_v, self._next_c = t.variable_count, t.check_count
            for v, c in t.edges:
                self.connect(v, c)

    def add_variable(self, checks=()) -> int:
        v = self._next_v
        self._next_v += 1
        self.vn[v] = set()
        for c in checks:
            self.connect(v, c)
        return v

    def add_check(self, variables=()) -> int:
        c = self._next_c
        self._next_c += 1
        self.cn[c] = set()
        for v in variables:
            self.connect(v, c)
        return c

    def pendant(self, v: int, count: int = 1) -> None:
        for _ in range(count):
            self.add_check([v])

    def connect(self, v: int, c: int) -> None:
        self.vn[v].add(c)
        self.cn[c].add(v)

    def disconnect(self, v: int, c: int) -> None:
        self.vn[v].remove(c)
        self.cn[c].remove(v)

    def remove_variable(self, v: int) -> None:
        for c in self.vn.pop(v):
            self.cn[c].discard(v)

    def remove_check(self, c: int) -> None:
        for v in self.cn.pop(c):
            self.vn[v].discard(c)

    def checks_of(self, v: int) -> list[int]:
        return sorted(self.vn[v])

    def variables_of(self, c: int) -> list[int]:
        return sorted(self.cn[c])

    def other_end(self, c: int, v: int) -> int:
        (u,) = self.cn[c] - {v}
        return u

    def shared_check(self, u: int, v: int) -> int | None:
        common = self.vn[u] & self.vn[v]
        return min(common) if common else None

    def build(self) -> TannerGraph:
        vmap = {v: i for i, v in enumerate(sorted(self.vn))}
        cmap = {c: i for i, c in enumerate(sorted(self.cn))}
        edges = [(vmap[v], cmap[c]) for v, cs in self.vn.items() for c in cs]
        return TannerGraph(len(vmap), len(cmap), edges)


def _check_g(g: int) -> int:
    if g < 6 or g % 2:
        raise PreconditionError(f"girth g must be an even integer >= 6, got {g}")
    return g // 2


def _check_dv(dv: int) -> None:
    if dv < 3:
        raise PreconditionError(f"variable degree must be >= 3, got {dv}")


def _base(dv: int, g_cage: int) -> tuple[_Builder, Graph]:
    cage = get_cage(dv, g_cage)
    return _Builder(to_tanner(subdivide(cage))), cage


def _finish(bld: _Builder, b: int, cat: Category, dv: int, g, prov: str,
            a: int | None = None) -> Witness:
    t = bld.build()
    w = Witness(t, t.variable_count if a is None else a, b, cat, dv, g, prov)
    w.verify()
    return w


# -- leafless elementary trapping sets ---------------------------------------

def lets_b0(dv: int, g: int) -> Witness:
    """The subdivided (dv; g/2)-cage itself: a (n, 0) LETS of girth exactly g."""
    _check_dv(dv)
    bld, cage = _base(dv, _check_g(g))
    w = _finish(bld, 0, Category.LETS, dv, g, "cage", a=cage.node_count)
    if w.graph.girth != g:
        raise InternalInconsistencyError(f"cage base has girth {w.graph.girth}, expected {g}")
    return w


def lets_b_dv_minus_2(dv: int, g: int) -> Witness:
    """Replace the check between u and v by a new variable w bridging them."""
    _check_dv(dv)
    bld, cage = _base(dv, _check_g(g))
    c = 0
    v, u = bld.variables_of(c)
    bld.remove_check(c)
    w = bld.add_variable()
    bld.add_check([w, v])
    bld.add_check([w, u])
    bld.pendant(w, dv - 2)
    return _finish(bld, dv - 2, Category.LETS, dv, g, "cage-add-variable",
                   a=cage.node_count + 1)


def lets_b_dv(dv: int, g: int) -> Witness:
    """Delete one variable of the base."""
    _check_dv(dv)
    bld, cage = _base(dv, _check_g(g))
    bld.remove_variable(0)
    return _finish(bld, dv, Category.LETS, dv, g, "cage-drop-variable",
                   a=cage.node_count - 1)


def lets_b_even(dv: int, g: int, b: int) -> Witness:
    """Cut a matching of b/2 checks and hang a pendant check on each endpoint."""
    _check_dv(dv)
    if b < 2 or b % 2 or b >= dv + 2:
        raise PreconditionError(f"b must be even with 2 <= b < dv+2, got b={b}")
    bld, cage = _base(dv, _check_g(g))
    used: set[int] = set()
    matching = []
    for c in sorted(bld.cn):
        ends = bld.variables_of(c)
        if used.isdisjoint(ends):
            matching.append(c)
            used.update(ends)
            if len(matching) == b // 2:
                break
    assert len(matching) == b // 2, "cage has no matching of the required size"
    for c in matching:
        bld.remove_check(c)
    for v in sorted(used):
        bld.pendant(v)
    return _finish(bld, b, Category.LETS, dv, g, "cage-cut-matching", a=cage.node_count)


def lets_b_2dv_minus_2(dv: int, g: int) -> Witness:
    """Delete two adjacent variables and the check they share."""
    _check_dv(dv)
    if g < 8:
        raise PreconditionError("this construction needs g >= 8")
    bld, cage = _base(dv, _check_g(g))
    v1, v2 = bld.variables_of(0)
    bld.remove_check(0)
    bld.remove_variable(v1)
    bld.remove_variable(v2)
    return _finish(bld, 2 * (dv - 1), Category.LETS, dv, g, "cage-drop-adjacent-pair",
                   a=cage.node_count - 2)


def lets_b_dv_plus_2(dv: int, g: int) -> Witness:
    """Delete a variable v and a check c = (u1, u2) away from v; pendants on u1, u2."""
    _check_dv(dv)
    g_half = _check_g(g)
    if dv == 3 and g < 10:
        raise PreconditionError("for dv = 3 this construction needs g >= 10")
    bld, cage = _base(dv, g_half)
    v = 0
    near = {bld.other_end(c, v) for c in bld.checks_of(v)} | {v}
    pick = None
    for c in sorted(bld.cn):
        u1, u2 = bld.variables_of(c)
        if v in (u1, u2):
            continue
        if dv == 3 and (u1 in near or u2 in near):
            continue
        pick = (c, u1, u2)
        break
    if pick is None:
        raise PreconditionError("no admissible (variable, check) pair; girth too small")
    c, u1, u2 = pick
    bld.remove_variable(v)
    bld.remove_check(c)
    bld.pendant(u1)
    bld.pendant(u2)
    return _finish(bld, dv + 2, Category.LETS, dv, g, "cage-drop-variable-and-check",
                   a=cage.node_count - 1)


def lets_cycle_pendant(dv: int, cycle_len: int) -> Witness:
    """A subdivided cycle with one pendant check per variable (dv = 3)."""
    if dv != 3:
        raise PreconditionError("the pendant-cycle construction is defined for dv = 3")
    if cycle_len < 3:
        raise PreconditionError("cycle length must be >= 3")
    bld = _Builder()
    vs = [bld.add_variable() for _ in range(cycle_len)]
    for i in range(cycle_len):
        bld.add_check([vs[i], vs[(i + 1) % cycle_len]])
    for v in vs:
        bld.pendant(v)
    return _finish(bld, cycle_len, Category.LETS, dv, 2 * cycle_len, "pendant-cycle")


def fact1_lets_b1(g: int, allow_fallback: bool = False,
                  source: Graph | None = None) -> Witness:
    """(a, 1) LETS for dv = 5 from a (5,6; g/2)-good-graph.

    Subdivide the good-graph and detach one check from its degree-6
    variable. With ``allow_fallback`` a non-minimal good-graph from
    :func:`build_good_graph` is used when no minimal one is registered;
    ``source`` supplies the good-graph directly.
    """
    g_half = _check_g(g)
    rec = good_graph_record(5, 6, g_half)
    prov = "good-graph-cut"
    if source is not None:
        degs = sorted(source.degrees())
        if degs[-1] != 6 or degs[-2] != 5 or degs[0] != 5:
            raise PreconditionError("source must have one degree-6 node, all others degree 5")
        good = source
        prov += "(given)"
    elif rec.materializable:
        good = get_good_graph(5, 6, g_half)
    elif allow_fallback:
        good = build_good_graph(5, g_half)
        prov += "(built)"
    else:
        raise NotAvailableError(
            f"no (5,6;{g_half})-good-graph is available ({rec.availability.value})")
    bld = _Builder(to_tanner(subdivide(good)))
    (hub,) = [v for v, cs in bld.vn.items() if len(cs) == 6]
    bld.disconnect(hub, bld.checks_of(hub)[0])
    return _finish(bld, 1, Category.LETS, 5, g, prov, a=good.node_count)


# -- elementary trapping sets with a leaf ------------------------------------

def etsl_from_lets(w: Witness) -> Witness:
    """Join a new variable to a degree-1 check of a LETS, plus dv-1 pendants."""
    if w.claimed_category is not Category.LETS:
        raise PreconditionError("input witness must be a LETS")
    if w.claimed_b < 1:
        raise PreconditionError("input LETS must have b >= 1")
    bld = _Builder(w.graph)
    c = min(c for c, vs in bld.cn.items() if len(vs) == 1)
    x = bld.add_variable([c])
    bld.pendant(x, w.dv - 1)
    return _finish(bld, w.claimed_b + w.dv - 2, Category.ETSL, w.dv, w.girth_floor,
                   f"leaf-extension<-{w.provenance}", a=w.claimed_a + 1)


def etsl_tree(dv: int, b: int, g: int | float = INF) -> Witness:
    """Path of (b-2)/(dv-2) variables, padded with pendant checks."""
    _check_dv(dv)
    if b < dv:
        raise PreconditionError(f"a tree needs b >= dv, got b={b}")
    if (b - 2) % (dv - 2):
        raise PreconditionError(f"(b-2) must be divisible by dv-2 for a tree, got b={b}")
    a = (b - 2) // (dv - 2)
    bld = _Builder()
    vs = [bld.add_variable() for _ in range(a)]
    for x, y in zip(vs, vs[1:]):
        bld.add_check([x, y])
    for v in vs:
        bld.pendant(v, dv - len(bld.vn[v]))
    return _finish(bld, b, Category.ETSL, dv, g, "tree")


# -- non-elementary trapping sets --------------------------------------------

def _two_copy_glue(dv: int, g_half: int) -> tuple[_Builder, int, int]:
    cage = get_cage(dv, g_half)
    both, offsets = disjoint_union(cage, cage)
    bld = _Builder(to_tanner(subdivide(both)))
    v1, v2 = cage.edge_list()[0]
    n = offsets[1]
    ends = [v1, v2, v1 + n, v2 + n]
    bld.remove_check(bld.shared_check(v1, v2))
    bld.remove_check(bld.shared_check(v1 + n, v2 + n))
    glue = bld.add_check(ends)
    return bld, glue, 2 * cage.node_count


def nets_two_copies(dv: int, g: int) -> Witness:
    """Two bases glued by one degree-4 check replacing a check in each."""
    _check_dv(dv)
    bld, _, a = _two_copy_glue(dv, _check_g(g))
    return _finish(bld, 0, Category.NETS, dv, g, "two-copies", a=a)


def nets_b0_merge(dv: int, g: int) -> Witness:
    """From the (dv; (g+4)/2)-cage, drop an adjacent pair with all their checks
    and join the 2(dv-1) orphaned neighbours with one check."""
    _check_dv(dv)
    _check_g(g)
    bld, cage = _base(dv, (g + 4) // 2)
    v1, v2 = bld.variables_of(0)
    outer = []
    for v in (v1, v2):
        for c in bld.checks_of(v):
            if c != 0:
                outer.append(bld.other_end(c, v))
                bld.remove_check(c)
    bld.remove_check(0)
    bld.remove_variable(v1)
    bld.remove_variable(v2)
    bld.add_check(outer)
    return _finish(bld, 0, Category.NETS, dv, g, "pair-merge", a=cage.node_count - 2)


def star_merge_admissible(dv: int, b: int) -> bool:
    if dv % 2 == 0:
        return b % 2 == 0 and 0 <= b <= dv - 2
    return b % 2 == 1 and 1 <= b <= dv - 2


def nets_star_merge(dv: int, g: int, b: int) -> Witness:
    """From the (dv; (g+2)/2)-cage, delete v and merge m of its checks into one
    check on the m opposite variables (m = dv - b + 1, or dv when b = 0)."""
    _check_dv(dv)
    _check_g(g)
    if not star_merge_admissible(dv, b):
        raise ParityError(f"star merge needs b of the same parity as dv, "
                          f"b <= dv-2 (and b >= 1 for odd dv); got dv={dv}, b={b}")
    bld, cage = _base(dv, (g + 2) // 2)
    v = 0
    m = dv if b == 0 else dv - b + 1
    merged = bld.checks_of(v)[:m]
    opposite = [bld.other_end(c, v) for c in merged]
    for c in merged:
        bld.remove_check(c)
    bld.remove_variable(v)
    bld.add_check(opposite)
    return _finish(bld, b, Category.NETS, dv, g, "star-merge", a=cage.node_count - 1)


def nets_iii_a(dv: int, g: int) -> Witness:
    """Two new variables share an existing check (degree 4), dv-1 pendants each."""
    _check_dv(dv)
    bld, cage = _base(dv, _check_g(g))
    for _ in range(2):
        x = bld.add_variable([0])
        bld.pendant(x, dv - 1)
    return _finish(bld, 2 * (dv - 1), Category.NETS, dv, g, "shared-check-pair",
                   a=cage.node_count + 2)


def nets_iii_b(dv: int, g: int) -> Witness:
    """One new variable on an existing check (degree 3), plus dv-1 pendants."""
    _check_dv(dv)
    bld, cage = _base(dv, _check_g(g))
    x = bld.add_variable([0])
    bld.pendant(x, dv - 1)
    return _finish(bld, dv, Category.NETS, dv, g, "shared-check", a=cage.node_count + 1)


def nets_iii_c(dv: int, g: int) -> Witness:
    """Delete v; v' takes c_1 plus dv-1 pendants, v'' takes c_1..c_{dv-1} plus a
    pendant. Check c_1 ends with degree 3 and c_dv with degree 1."""
    _check_dv(dv)
    bld, cage = _base(dv, _check_g(g))
    v = 0
    cs = bld.checks_of(v)
    bld.remove_variable(v)
    v1 = bld.add_variable([cs[0]])
    bld.pendant(v1, dv - 1)
    v2 = bld.add_variable(cs[:dv - 1])
    bld.pendant(v2)
    return _finish(bld, dv + 2, Category.NETS, dv, g, "split-variable", a=cage.node_count + 1)


def nets_iii_d(dv: int, g: int) -> Witness:
    """From the (dv; (g+2)/2)-cage, delete v with its checks; a hub check joins
    the dv orphaned neighbours and a new variable v' that has dv-1 pendants."""
    _check_dv(dv)
    _check_g(g)
    if dv % 2 == 0:
        raise PreconditionError("hub-check construction needs odd dv")
    bld, cage = _base(dv, (g + 2) // 2)
    v = 0
    opposite = []
    for c in bld.checks_of(v):
        opposite.append(bld.other_end(c, v))
        bld.remove_check(c)
    bld.remove_variable(v)
    x = bld.add_variable()
    bld.add_check(opposite + [x])
    bld.pendant(x, dv - 1)
    return _finish(bld, dv - 1, Category.NETS, dv, g, "hub-check", a=cage.node_count)


def fact2_nets_b0_dv3(g: int, source: Graph | None = None, t: int | None = None) -> Witness:
    """(|V|+t-2, 0) NETS for dv = 3 from a (3,4; (g+2)/2)-graph with t degree-4 nodes.

    Every degree-4 node but the first is split into two adjacent cubic
    nodes; after subdivision the remaining degree-4 variable and its four
    checks are replaced by one degree-4 check. With ``source`` omitted the
    registered graph for (g+2)/2 is used.
    """
    _check_g(g)
    if source is None:
        source = get_good_graph(3, 4, (g + 2) // 2)
    degs = source.degrees()
    if set(degs) - {3, 4}:
        raise PreconditionError("source graph must have degrees in {3, 4}")
    hubs = [v for v, d in enumerate(degs) if d == 4]
    if not hubs:
        raise PreconditionError("source graph has no degree-4 node")
    if t is not None and t != len(hubs):
        raise PreconditionError(f"source has {len(hubs)} degree-4 nodes, not t={t}")

    w, split = hubs[0], hubs[1:]
    n = source.node_count
    edges = [e for e in source.edges if e[0] not in split and e[1] not in split]
    extra = n
    for v in split:
        u = source.neighbors(v)
        edges += [(v, extra), (v, u[0]), (v, u[1]), (extra, u[2]), (extra, u[3])]
        extra += 1
    h = Graph(extra, edges)

    bld = _Builder(to_tanner(subdivide(h)))
    outer = []
    for c in bld.checks_of(w):
        outer.append(bld.other_end(c, w))
        bld.remove_check(c)
    bld.remove_variable(w)
    bld.add_check(outer)
    return _finish(bld, 0, Category.NETS, 3, g, "cubic-split", a=n + len(hubs) - 2)


def fact3_nets_b2_dv5(g: int) -> Witness:
    """Two-copy glue for dv = 5, then split one degree-2 check into two pendants."""
    bld, glue, a = _two_copy_glue(5, _check_g(g))
    z = min(c for c, vs in bld.cn.items() if len(vs) == 2)
    u1, u2 = bld.variables_of(z)
    bld.remove_check(z)
    bld.pendant(u1)
    bld.pendant(u2)
    return _finish(bld, 2, Category.NETS, 5, g, "two-copies-split", a=a)


# -- dispatch by rule id -----------------------------------------------------

RULE_BUILDERS: dict[str, Callable[[int, int, int], Witness]] = {
    "cage": lambda dv, g, b: lets_b0(dv, g),
    "cage-add-variable": lambda dv, g, b: lets_b_dv_minus_2(dv, g),
    "cage-drop-variable": lambda dv, g, b: lets_b_dv(dv, g),
    "cage-cut-matching": lets_b_even,
    "cage-drop-adjacent-pair": lambda dv, g, b: lets_b_2dv_minus_2(dv, g),
    "cage-drop-variable-and-check": lambda dv, g, b: lets_b_dv_plus_2(dv, g),
    "pendant-cycle": lambda dv, g, b: lets_cycle_pendant(dv, b),
    "good-graph-cut": lambda dv, g, b: fact1_lets_b1(g),
    "two-copies": lambda dv, g, b: nets_two_copies(dv, g),
    "pair-merge": lambda dv, g, b: nets_b0_merge(dv, g),
    "star-merge": nets_star_merge,
    "shared-check-pair": lambda dv, g, b: nets_iii_a(dv, g),
    "shared-check": lambda dv, g, b: nets_iii_b(dv, g),
    "split-variable": lambda dv, g, b: nets_iii_c(dv, g),
    "hub-check": lambda dv, g, b: nets_iii_d(dv, g),
    "cubic-split": lambda dv, g, b: fact2_nets_b0_dv3(g),
    "two-copies-split": lambda dv, g, b: fact3_nets_b2_dv5(g),
}


def build_rule(rule: str, dv: int, g: int, b: int) -> Witness:
    """Materialize the witness behind a bound rule id.

    Leaf extensions are written ``leaf-extension<-<inner rule>``; the inner
    LETS witness is built with b - dv + 2 unsatisfied checks.
    """
    prefix = "leaf-extension<-"
    if rule.startswith(prefix):
        inner = build_rule(rule[len(prefix):], dv, g, b - dv + 2)
        return etsl_from_lets(inner)
    if rule == "tree":
        return etsl_tree(dv, b, g)
    try:
        fn = RULE_BUILDERS[rule]
    except KeyError:
        raise PreconditionError(f"unknown construction rule {rule!r}") from None
    w = fn(dv, g, b)
    if w.girth_floor < g:
        raise PreconditionError(f"{rule} only guarantees girth >= {w.girth_floor} < {g}")
    return Witness(w.graph, w.claimed_a, w.claimed_b, w.claimed_category, dv, g, w.provenance)


def build_witness(category: Category | str, dv: int, g: int, b: int) -> Witness:
    """Witness for the smallest materializable construction in a class.

    Rules are tried in order of their bound value; rules whose graph is not
    available are skipped. Raises :class:`NotAvailableError` when none works.
    """
    from .bounds import class_exists, upper_rules

    cat = Category(str(category).upper())
    if not any(class_exists(dv, a, b) for a in (1, 2)):
        raise ParityError(f"no ({dv}-regular) trapping set has b={b} (parity)")
    rules = [r for r in upper_rules(cat, dv, g, b) if r.value is not None]
    rules.sort(key=lambda r: r.value)
    reasons = []
    for r in rules:
        try:
            return build_rule(r.provenance, dv, g, b)
        except NotAvailableError as exc:
            reasons.append(f"{r.provenance}: {exc}")
    detail = "; ".join(reasons) if reasons else "no construction applies"
    raise NotAvailableError(f"no {cat} witness for dv={dv}, g={g}, b={b}: {detail}")
