"""Pure-Python kernels: exact big-integer arithmetic, no compiled code."""

from __future__ import annotations

import math

import numpy as np

BACKEND = "python"


def jet_table(N: int, order: int, wanted) -> dict[int, tuple[int, ...]]:
    """Taylor coefficients at ``y = 1`` of ``J_n(y)`` for each ``n`` in ``wanted``.

    Runs the functional-equation recurrence on exponential-generating
    numerators, which keeps every quantity an integer::

        J_n = n * B_(n-1),   a_n = jet(y^n) * J_n,
        B_m = sum_(k=1..m) C(m-1, k-1) * a_k * B_(m-k).
    """
    wanted = sorted(set(int(n) for n in wanted))
    if N < 1 or any(n < 1 or n > N for n in wanted):
        raise ValueError("wanted sizes must lie in 1..N")
    W = order + 1
    B = [[1] + [0] * order]
    A: list = [None]
    out = {}
    targets = set(wanted)
    for n in range(1, N + 1):
        Jn = [n * c for c in B[n - 1]]
        if n in targets:
            out[n] = tuple(Jn)
        if n == N:
            break
        yk = [math.comb(n, i) for i in range(W)]
        A.append([sum(yk[i] * Jn[j - i] for i in range(j + 1)) for j in range(W)])
        acc = [0] * W
        m = n
        for k in range(1, m + 1):
            ak = A[k]
            bk = B[m - k]
            c = math.comb(m - 1, k - 1)
            for j in range(W):
                s = 0
                for i in range(j + 1):
                    s += ak[i] * bk[j - i]
                acc[j] += c * s
        B.append(acc)
    return out


def _decode(seq, n: int) -> list[tuple[int, int]]:
    deg = [1] * n
    for x in seq:
        deg[x] += 1
    ptr = 0
    while deg[ptr] != 1:
        ptr += 1
    leaf = ptr
    edges = []
    for x in seq:
        edges.append((leaf, x))
        deg[x] -= 1
        if deg[x] == 1 and x < ptr:
            leaf = x
        else:
            ptr += 1
            while deg[ptr] != 1:
                ptr += 1
            leaf = ptr
    edges.append((leaf, n - 1))
    return edges


def total_heights(seqs: np.ndarray, roots: np.ndarray, n: int) -> np.ndarray:
    """Total height of each rooted tree given by a 0-based Prüfer row and root."""
    out = np.zeros(len(roots), dtype=np.int64)
    if n == 1:
        return out
    for b, (seq, root) in enumerate(zip(seqs.tolist(), roots.tolist())):
        adj: list[list[int]] = [[] for _ in range(n)]
        for u, v in _decode(seq, n):
            adj[u].append(v)
            adj[v].append(u)
        depth = [-1] * n
        depth[root] = 0
        queue = [root]
        total = 0
        for v in queue:
            d = depth[v]
            total += d
            for u in adj[v]:
                if depth[u] < 0:
                    depth[u] = d + 1
                    queue.append(u)
        out[b] = total
    return out
