# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled backtracking kernel; semantics match kmagic._backtrack_py."""

from cpython.mem cimport PyMem_Free, PyMem_Malloc

SAT = 1
UNSAT = 0
UNDECIDED = -1


def search(int n, int k, int c, us, vs, long long node_cap):
    """Find an edge labeling with all vertex sums equal to c mod k.

    us/vs hold edge endpoints in assignment order; node_cap < 0 means
    unbounded.  Returns (status, labels or None, nodes) with labels in
    assignment order.
    """
    cdef int m = len(us)
    cdef size_t span = 4 * max(m, 1) + 2 * max(n, 1)
    cdef int *block = <int *> PyMem_Malloc(span * sizeof(int))
    if block == NULL:
        raise MemoryError()
    cdef int *eu = block
    cdef int *ev = block + max(m, 1)
    cdef int *labels = block + 2 * max(m, 1)
    cdef int *nxt = block + 3 * max(m, 1)
    cdef int *left = block + 4 * max(m, 1)
    cdef int *sums = left + max(n, 1)
    cdef int i, u, v, x, f, t, y, pu, pv, pos
    cdef long long nodes = 0
    cdef int status = UNSAT
    try:
        for i in range(n):
            left[i] = 0
            sums[i] = 0
        for i in range(m):
            eu[i] = us[i]
            ev[i] = vs[i]
            labels[i] = 0
            nxt[i] = 1
            left[eu[i]] += 1
            left[ev[i]] += 1
        pos = 0
        while True:
            if pos == m:
                status = SAT
                break
            u = eu[pos]
            v = ev[pos]
            x = 0
            if left[u] == 1 or left[v] == 1:
                if nxt[pos] == 1:
                    if left[u] == 1:
                        f = (c - sums[u] + k) % k
                        if left[v] == 1 and (c - sums[v] + k) % k != f:
                            f = 0
                    else:
                        f = (c - sums[v] + k) % k
                    if f != 0:
                        x = f
                        nxt[pos] = k
            else:
                t = nxt[pos]
                if t <= k - 1:
                    x = t
                    nxt[pos] = t + 1
            if x == 0:
                nxt[pos] = 1
                pos -= 1
                if pos < 0:
                    status = UNSAT
                    break
                y = labels[pos]
                pu = eu[pos]
                pv = ev[pos]
                sums[pu] = (sums[pu] - y + k) % k
                sums[pv] = (sums[pv] - y + k) % k
                left[pu] += 1
                left[pv] += 1
                continue
            nodes += 1
            if 0 <= node_cap < nodes:
                status = UNDECIDED
                break
            labels[pos] = x
            sums[u] = (sums[u] + x) % k
            sums[v] = (sums[v] + x) % k
            left[u] -= 1
            left[v] -= 1
            pos += 1
        if status == SAT:
            out = [labels[i] for i in range(m)]
            return SAT, out, nodes
        return status, None, nodes
    finally:
        PyMem_Free(block)
