# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled shortest-cycle kernel; same contract as ``_girth_py.girth_csr``."""

from libc.stdlib cimport malloc, free


def girth_csr(const int[::1] indptr, const int[::1] indices, const int[::1] sources):
    cdef Py_ssize_t n = indptr.shape[0] - 1
    cdef Py_ssize_t ns = sources.shape[0]
    cdef int *dist
    cdef int *parent
    cdef int *queue
    cdef int best = -1
    cdef int s, u, w, du, dw, pu, c, k
    cdef Py_ssize_t head, tail, i, j

    if n <= 0:
        return -1
    dist = <int *> malloc(n * sizeof(int))
    parent = <int *> malloc(n * sizeof(int))
    queue = <int *> malloc(n * sizeof(int))
    if dist == NULL or parent == NULL or queue == NULL:
        free(dist)
        free(parent)
        free(queue)
        raise MemoryError()
    try:
        for i in range(n):
            dist[i] = -1
        for j in range(ns):
            s = sources[j]
            dist[s] = 0
            parent[s] = -1
            queue[0] = s
            head = 0
            tail = 1
            while head < tail:
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
                        queue[tail] = w
                        tail += 1
                    elif w != pu:
                        c = du + dw + 1
                        if best == -1 or c < best:
                            best = c
            for i in range(tail):
                dist[queue[i]] = -1
            if best == 3:
                break
    finally:
        free(dist)
        free(parent)
        free(queue)
    return best
