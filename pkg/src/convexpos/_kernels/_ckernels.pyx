# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels; see _pykernels for the reference semantics."""
import numpy as np
cimport numpy as cnp
from libc.stdlib cimport malloc, free

cnp.import_array()


cdef bint _independent(const int[:, :] pos, int* subset, int k, int* seen) noexcept nogil:
    cdef int g, j, best, arg, v, hit = 0
    cdef int m = pos.shape[0]
    for j in range(k):
        seen[j] = 0
    for g in range(m):
        best = -1
        arg = 0
        for j in range(k):
            v = pos[g, subset[j]]
            if v > best:
                best = v
                arg = j
        if not seen[arg]:
            seen[arg] = 1
            hit += 1
            if hit == k:
                return True
    return hit == k


def subset_independent(const int[:, :] pos, subset):
    cdef int k = len(subset)
    cdef int* buf = <int*> malloc(2 * k * sizeof(int) + 1)
    cdef int j
    cdef bint out
    try:
        for j in range(k):
            buf[j] = subset[j]
        out = _independent(pos, buf, k, buf + k)
    finally:
        free(buf)
    return out


cdef struct _Search:
    int n
    int depth
    int best_len
    int* cur
    int* best
    int* seen


cdef void _dfs(const int[:, :] pos, _Search* st, int start) noexcept nogil:
    cdef int x, j
    if st.depth > st.best_len:
        st.best_len = st.depth
        for j in range(st.depth):
            st.best[j] = st.cur[j]
    for x in range(start, st.n):
        if st.depth + (st.n - x) <= st.best_len:
            break
        st.cur[st.depth] = x
        st.depth += 1
        if st.depth < 3 or _independent(pos, st.cur, st.depth, st.seen):
            _dfs(pos, st, x + 1)
        st.depth -= 1


def max_independent_search(const int[:, :] pos, int lower=0):
    cdef _Search st
    cdef int n = pos.shape[1]
    st.n = n
    st.depth = 0
    st.best_len = lower - 1 if lower > 0 else 0
    st.cur = <int*> malloc((3 * n + 1) * sizeof(int))
    st.best = st.cur + n
    st.seen = st.cur + 2 * n
    try:
        with nogil:
            _dfs(pos, &st, 0)
        if lower > 0 and st.best_len == lower - 1:
            return []
        return [st.best[j] for j in range(st.best_len)]
    finally:
        free(st.cur)


def cc_violations(const signed char[:, :, :] s, int limit):
    cdef int n = s.shape[0]
    cdef int t, p, q, r, u
    cdef long count = 0
    rows = []
    for t in range(n):
        for p in range(n):
            for q in range(n):
                if s[p, q, t] <= 0:
                    continue
                for r in range(n):
                    if s[t, q, r] > 0 and s[p, t, r] > 0 and s[p, q, r] < 0:
                        count += 1
                        if len(rows) < limit:
                            rows.append((4, (t, p, q, r)))
    for t in range(n):
        for u in range(n):
            for p in range(n):
                if s[t, u, p] <= 0:
                    continue
                for q in range(n):
                    if s[t, u, q] <= 0 or s[t, p, q] <= 0:
                        continue
                    for r in range(n):
                        if s[t, u, r] > 0 and s[t, q, r] > 0 and s[t, p, r] < 0:
                            count += 1
                            if len(rows) < limit:
                                rows.append((5, (t, u, p, q, r)))
    return count, rows


def caratheodory_independent(const signed char[:, :, :] s, subset):
    cdef int k = len(subset)
    cdef int i, j, l, x, a, b, c, d
    cdef signed char o
    cdef int* sub = <int*> malloc(k * sizeof(int) + 1)
    try:
        for i in range(k):
            sub[i] = subset[i]
        for i in range(k):
            a = sub[i]
            for j in range(i + 1, k):
                b = sub[j]
                for l in range(j + 1, k):
                    c = sub[l]
                    o = s[a, b, c]
                    for x in range(k):
                        d = sub[x]
                        if d == a or d == b or d == c:
                            continue
                        if s[a, b, d] == o and s[b, c, d] == o and s[c, a, d] == o:
                            return False
        return True
    finally:
        free(sub)


def max_convex_chain(const signed char[:, :, :] s):
    cdef int n = s.shape[0]
    if n < 3:
        return n
    cdef int best = 3
    cdef int p, q, r, m, i, j, k, v, fij, key, tmp
    cdef int* chain = <int*> malloc((n + 1) * sizeof(int))
    cdef int* f = <int*> malloc((n + 1) * (n + 1) * sizeof(int))
    try:
        for p in range(n):
            for q in range(p + 1, n):
                m = 0
                chain[m] = q
                m += 1
                for r in range(p + 1, n):
                    if r != q and s[p, q, r] > 0:
                        # insertion sort by angle around p
                        key = r
                        i = m
                        while i > 1 and s[p, key, chain[i - 1]] > 0:
                            chain[i] = chain[i - 1]
                            i -= 1
                        chain[i] = key
                        m += 1
                if m + 1 <= best:
                    continue
                for i in range(m * m):
                    f[i] = 0
                for j in range(1, m):
                    f[j] = 3
                for j in range(1, m):
                    for k in range(j + 1, m):
                        v = 0
                        for i in range(j):
                            fij = f[i * m + j]
                            if fij and fij + 1 > v and s[chain[i], chain[j], chain[k]] > 0:
                                v = fij + 1
                        f[j * m + k] = v
                for i in range(m):
                    for j in range(i + 1, m):
                        if f[i * m + j] > best and s[chain[i], chain[j], p] > 0:
                            best = f[i * m + j]
        return best
    finally:
        free(chain)
        free(f)


def cup_cap_lengths(const cnp.int64_t[:, :] T):
    cdef int n = T.shape[0]
    if n == 0:
        return [], []
    if n == 1:
        return [0], [0]
    cdef cnp.int64_t[:, :] L = np.zeros((n, n), dtype=np.int64)
    cdef cnp.int64_t[:, :] prev = np.zeros((n, n), dtype=np.int64)
    cdef int sgn, i, j, h, bi, bj
    cdef cnp.int64_t bl, t, u
    out = []
    for sgn in (-1, 1):
        bi, bj, bl = 0, 1, 2
        for j in range(n):
            for i in range(j):
                L[i, j] = 2
                prev[i, j] = -1
                t = T[i, j]
                for h in range(i):
                    u = T[h, i]
                    if ((u > t) if sgn < 0 else (u < t)) and L[h, i] + 1 > L[i, j]:
                        L[i, j] = L[h, i] + 1
                        prev[i, j] = h
                if L[i, j] > bl:
                    bi, bj, bl = i, j, L[i, j]
        chain = [bj, bi]
        i, j = bi, bj
        while prev[i, j] >= 0:
            h = prev[i, j]
            chain.append(h)
            i, j = h, i
        out.append(list(reversed(chain)))
    return out[0], out[1]
