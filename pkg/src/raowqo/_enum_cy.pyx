# cython: language_level=3
# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled backtracking enumeration of entry-indexed realizations.

Twin of ``_enum_py.realizations``: identical search order, identical output.
See that module for the algorithm notes.
"""

MAXN = 64


cdef bint _residual_graphic(int* rem, int lo, int n) noexcept:
    cdef int buf[64]
    cdef int m = n - lo
    cdef int i, j, k, key, total, prefix, tail
    if m <= 0:
        return True
    for i in range(m):
        buf[i] = rem[lo + i]
    # insertion sort, descending
    for i in range(1, m):
        key = buf[i]
        j = i - 1
        while j >= 0 and buf[j] < key:
            buf[j + 1] = buf[j]
            j -= 1
        buf[j + 1] = key
    total = 0
    for i in range(m):
        total += buf[i]
    if total % 2:
        return False
    if buf[0] > m - 1:
        return False
    prefix = 0
    for k in range(1, m + 1):
        prefix += buf[k - 1]
        tail = 0
        for i in range(k, m):
            tail += buf[i] if buf[i] < k else k
        if prefix > k * (k - 1) + tail:
            return False
    return True


cdef bint _row(int i, int n, int* rem, unsigned long long* rows, list out,
               long long limit):
    cdef int u, j, need, m2
    cdef int cand[64]
    cdef int chosen[64]
    cdef list edges
    if i == n:
        edges = []
        for u in range(n):
            for j in range(u + 1, n):
                if rows[u] & ((<unsigned long long> 1) << j):
                    edges.append((u, j))
        out.append(tuple(edges))
        return limit >= 0 and <long long> len(out) >= limit
    need = rem[i]
    if need == 0:
        rows[i] = 0
        return _row(i + 1, n, rem, rows, out, limit)
    m2 = 0
    for j in range(i + 1, n):
        if rem[j] > 0:
            cand[m2] = j
            m2 += 1
    if need > m2:
        return False
    return _choose(i, n, need, 0, 0, cand, m2, chosen, rem, rows, out, limit)


cdef bint _choose(int i, int n, int need, int k, int start, int* cand, int m,
                  int* chosen, int* rem, unsigned long long* rows, list out,
                  long long limit):
    cdef int s, t
    cdef unsigned long long mask
    cdef bint stop
    if k == need:
        for t in range(need):
            rem[chosen[t]] -= 1
        stop = False
        if _residual_graphic(rem, i + 1, n):
            mask = 0
            for t in range(need):
                mask |= (<unsigned long long> 1) << chosen[t]
            rows[i] = mask
            stop = _row(i + 1, n, rem, rows, out, limit)
        for t in range(need):
            rem[chosen[t]] += 1
        return stop
    if m - start < need - k:
        return False
    for s in range(start, m):
        chosen[k] = cand[s]
        if _choose(i, n, need, k + 1, s + 1, cand, m, chosen, rem, rows, out,
                   limit):
            return True
    return False


def realizations(degrees, limit=None):
    """All simple graphs on vertices 0..n-1 with deg(i) == degrees[i].

    Same contract and output order as ``_enum_py.realizations``.
    """
    cdef int n = len(degrees)
    cdef int rem[64]
    cdef unsigned long long rows[64]
    cdef int i, d
    cdef int total = 0
    cdef long long cap
    if n > MAXN:
        raise ValueError("at most 64 vertices supported")
    out = []
    for i in range(n):
        d = degrees[i]
        if d < 0:
            raise ValueError("degrees must be non-negative")
        rem[i] = d
        total += d
    if limit is not None and limit <= 0:
        return out
    cap = -1 if limit is None else <long long> limit
    for i in range(n):
        if rem[i] > n - 1:
            return out
    if total % 2:
        return out
    if not _residual_graphic(rem, 0, n):
        return out
    _row(0, n, rem, rows, out, cap)
    return out
