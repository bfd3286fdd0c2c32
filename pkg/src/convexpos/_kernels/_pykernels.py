"""Pure-Python reference versions of the hot kernels.

Signatures match the compiled module exactly.  Arrays are numpy:
``pos`` is int32 (gaps x labels), ``sign`` is int8 (n x n x n).
"""
from functools import cmp_to_key

import numpy as np


def subset_independent(pos, subset):
    """Every index of ``subset`` is topmost in at least one gap."""
    k = len(subset)
    tops = pos[:, subset].argmax(axis=1)
    return len(np.unique(tops)) == k


def max_independent_search(pos, lower=0):
    """Lexicographically first maximum independent index set.

    Independence is hereditary, so a dependent prefix prunes its subtree.
    Sets smaller than three are independent.  ``lower`` is a known lower
    bound on the answer size (a set of that size is only reported if found).
    """
    n = pos.shape[1]
    best = []
    best_len = max(lower - 1, 0)
    cur = []

    def dfs(start):
        nonlocal best, best_len
        if len(cur) > best_len:
            best = list(cur)
            best_len = len(cur)
        for x in range(start, n):
            if len(cur) + (n - x) <= best_len:
                break
            cur.append(x)
            if len(cur) < 3 or subset_independent(pos, cur):
                dfs(x + 1)
            cur.pop()

    dfs(0)
    return best


def cc_violations(sign, limit):
    """Interiority and transitivity violations, lexicographically ordered.

    Returns ``(count, rows)`` where each row is ``(axiom, tuple)``;
    axiom 4 is interiority on ``(t, p, q, r)``, axiom 5 transitivity on
    ``(t, s, p, q, r)``.
    """
    pos = sign > 0
    neg = sign < 0
    rows = []
    # interiority: tqr, ptr, pqt  =>  pqr      indexed [t, p, q, r]
    a4 = (
        pos.transpose(0, 1, 2)[:, None, :, :]           # s[t,q,r]
        & pos.transpose(1, 0, 2)[:, :, None, :]         # s[p,t,r] -> [t,p,r]
        & pos.transpose(2, 0, 1)[:, :, :, None]         # s[p,q,t] -> [t,p,q]
        & neg[None, :, :, :]                            # s[p,q,r] < 0
    )
    hits4 = np.argwhere(a4)
    # transitivity: tsp, tsq, tsr, tpq, tqr  =>  tpr   indexed [t, s, p, q, r]
    a5 = (
        pos[:, :, :, None, None]
        & pos[:, :, None, :, None]
        & pos[:, :, None, None, :]
        & pos[:, None, :, :, None]
        & pos[:, None, None, :, :]
        & neg[:, None, :, None, :]
    )
    hits5 = np.argwhere(a5)
    count = len(hits4) + len(hits5)
    for h in hits4[:limit]:
        rows.append((4, tuple(int(v) for v in h)))
    for h in hits5[: max(limit - len(rows), 0)]:
        rows.append((5, tuple(int(v) for v in h)))
    return count, rows


def caratheodory_independent(sign, subset):
    """No element of ``subset`` lies inside a triangle of three others."""
    k = len(subset)
    s = sign
    for i in range(k):
        a = subset[i]
        for j in range(i + 1, k):
            b = subset[j]
            for l in range(j + 1, k):
                c = subset[l]
                o = s[a, b, c]
                for d in subset:
                    if d == a or d == b or d == c:
                        continue
                    if s[a, b, d] == o and s[b, c, d] == o and s[c, a, d] == o:
                        return False
    return True


def max_convex_chain(sign):
    """Size of the largest convex polygon of a CC system.

    For every anchor pair (p, q), with p the smallest vertex, candidates
    are sorted around p and a longest chain with positive consecutive
    triples is found; it closes if the last turn back to p is positive.
    """
    n = sign.shape[0]
    if n < 3:
        return n
    best = 3
    for p in range(n):
        key = cmp_to_key(lambda r, t: -1 if sign[p, r, t] > 0 else 1)
        for q in range(p + 1, n):
            cand = sorted((r for r in range(p + 1, n) if r != q and sign[p, q, r] > 0), key=key)
            chain = [q] + cand
            m = len(chain)
            if m + 1 <= best:
                continue
            f = [[0] * m for _ in range(m)]
            for j in range(1, m):
                f[0][j] = 3
            for j in range(1, m):
                cj = chain[j]
                for k in range(j + 1, m):
                    ck = chain[k]
                    v = 0
                    for i in range(j):
                        fij = f[i][j]
                        if fij and fij + 1 > v and sign[chain[i], cj, ck] > 0:
                            v = fij + 1
                    f[j][k] = v
            for i in range(m):
                for j in range(i + 1, m):
                    if f[i][j] > best and sign[chain[i], chain[j], p] > 0:
                        best = f[i][j]
    return best


def cup_cap_lengths(T):
    """Longest cup and cap over wires in start order.

    ``T[i, j]`` (i < j) is the switch index of the wires starting at
    positions i and j.  A chain is a cup when the indices of consecutive
    pairs strictly decrease, a cap when they strictly increase.  Returns
    ``(cup, cap)`` as position lists.
    """
    n = T.shape[0]
    if n == 0:
        return [], []
    if n == 1:
        return [0], [0]
    out = []
    for sgn in (-1, 1):
        L = np.zeros((n, n), dtype=np.int64)
        prev = -np.ones((n, n), dtype=np.int64)
        bi, bj, bl = 0, 1, 2
        for j in range(n):
            for i in range(j):
                L[i, j] = 2
                t = T[i, j]
                for h in range(i):
                    u = T[h, i]
                    if (u > t if sgn < 0 else u < t) and L[h, i] + 1 > L[i, j]:
                        L[i, j] = L[h, i] + 1
                        prev[i, j] = h
                if L[i, j] > bl:
                    bi, bj, bl = i, j, L[i, j]
        chain = [bj, bi]
        i, j = bi, bj
        while prev[i, j] >= 0:
            h = prev[i, j]
            chain.append(int(h))
            i, j = h, i
        out.append([int(c) for c in reversed(chain)])
    return out[0], out[1]
