"""Randomized backtracking search for small graphs with prescribed degrees and girth.

Used once to find the Robertson graph (19-cycle plus chords), a 13-node
(3,4;5)-good-graph and an 18-node (3,4;6)-graph with two degree-4 nodes.
The edge lists it printed are frozen in ``make_cage_data.py``.

    python tools/search_graphs.py robertson|good13|graph18
"""

import random
import sys


def _far(adj, s, t, limit):
    """True when dist(s, t) >= limit."""
    seen = {s}
    frontier = [s]
    for _ in range(limit - 1):
        nxt = []
        for u in frontier:
            for w in adj[u]:
                if w == t:
                    return False
                if w not in seen:
                    seen.add(w)
                    nxt.append(w)
        frontier = nxt
    return True


def search(n, target, g, seed_edges=(), rng=None, budget=200_000):
    adj = [set() for _ in range(n)]
    for u, v in seed_edges:
        adj[u].add(v)
        adj[v].add(u)
    steps = 0

    def rec():
        nonlocal steps
        steps += 1
        if steps > budget:
            raise TimeoutError
        cand = [v for v in range(n) if len(adj[v]) < target[v]]
        if not cand:
            return True
        u = cand[0]
        partners = [w for w in cand if w != u and w not in adj[u] and _far(adj, u, w, g - 1)]
        rng.shuffle(partners)
        if len(partners) < target[u] - len(adj[u]):
            return False
        for w in partners:
            adj[u].add(w)
            adj[w].add(u)
            if rec():
                return True
            adj[u].discard(w)
            adj[w].discard(u)
        return False

    return sorted((u, v) for u in range(n) for v in adj[u] if u < v) if rec() else None


def run(n, target, g, seed_edges=(), tries=2000, budget=100_000):
    for t in range(tries):
        try:
            res = search(n, target, g, seed_edges, random.Random(t), budget)
        except TimeoutError:
            continue
        if res:
            return t, res
    return None


if __name__ == "__main__":
    which = sys.argv[1]
    if which == "robertson":
        print(run(19, [4] * 19, 5, [(i, (i + 1) % 19) for i in range(19)]))
    elif which == "good13":
        print(run(13, [4] + [3] * 12, 5))
    elif which == "graph18":
        print(run(18, [4, 4] + [3] * 16, 6))
    else:
        raise SystemExit(__doc__)
