"""Pure-Python shortest-cycle kernel (fallback for the compiled extension)."""


def girth_csr(indptr, indices, sources):
    """Length of the shortest cycle through the CSR graph, or -1 if acyclic.

    BFS from every node in ``sources``; a non-tree edge (u, w) closes a walk
    of length ``dist[u] + dist[w] + 1``. The search from a source stops once
    no unexplored node can beat the current best.
    """
    n = len(indptr) - 1
    dist = [-1] * n
    parent = [-1] * n
    best = -1
    for s in sources:
        dist[s] = 0
        parent[s] = -1
        queue = [s]
        head = 0
        while head < len(queue):
            u = queue[head]
            head += 1
            du = dist[u]
            if best != -1 and 2 * du + 1 >= best:
                break
            pu = parent[u]
            for k in range(indptr[u], indptr[u + 1]):
                w = indices[k]
                dw = dist[w]
                if dw == -1:
                    dist[w] = du + 1
                    parent[w] = u
                    queue.append(w)
                elif w != pu:
                    c = du + dw + 1
                    if best == -1 or c < best:
                        best = c
        for v in queue:
            dist[v] = -1
        if best == 3:
            break
    return best
