"""Compare the compiled and pure-Python girth kernels.

    python benchmarks/bench_girth.py [--repeat N]

Both kernels run on the same CSR arrays; results must agree.
"""

import argparse
import timeit
from array import array

from cagets import _girth_py
from cagets.graph import _csr, subdivide
from cagets.registry import get_cage
from cagets.tanner import to_tanner

try:
    from cagets import _girth_ext
except ImportError:
    _girth_ext = None

CASES = [("(3;8) cage", 3, 8), ("(5;6) cage", 5, 6), ("(7;5) cage", 7, 5),
         ("(6;8) cage", 6, 8), ("(6;8) subdivided", 6, -8)]


def inputs(r, g):
    graph = get_cage(r, abs(g))
    if g < 0:
        t = to_tanner(subdivide(graph))
        nv = t.variable_count
        adj = [tuple(nv + c for c in cs) for cs in t.variable_adjacency]
        adj += list(t.check_adjacency)
        sources = list(range(nv))
    else:
        adj = graph.adjacency
        sources = list(range(graph.node_count))
    indptr, indices = _csr(adj)
    return indptr, indices, array("i", sources), len(adj)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    print(f"{'case':<20}{'nodes':>7}{'girth':>7}{'python ms':>12}{'cython ms':>12}{'speedup':>9}")
    for name, r, g in CASES:
        ip, ix, src, n = inputs(r, g)
        res = _girth_py.girth_csr(ip, ix, src)
        t_py = min(timeit.repeat(lambda: _girth_py.girth_csr(ip, ix, src),
                                 number=1, repeat=args.repeat)) * 1e3
        if _girth_ext is None:
            print(f"{name:<20}{n:>7}{res:>7}{t_py:>12.2f}{'--':>12}{'--':>9}")
            continue
        assert _girth_ext.girth_csr(ip, ix, src) == res
        t_cy = min(timeit.repeat(lambda: _girth_ext.girth_csr(ip, ix, src),
                                 number=1, repeat=args.repeat)) * 1e3
        print(f"{name:<20}{n:>7}{res:>7}{t_py:>12.2f}{t_cy:>12.3f}{t_py / t_cy:>8.0f}x")


if __name__ == "__main__":
    main()
