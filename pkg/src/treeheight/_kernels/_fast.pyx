# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled hot loops: the jet recurrence modulo word-size primes, and batch
Prüfer decoding with total-height evaluation."""

from libc.stdint cimport int64_t, uint64_t
from libc.stdlib cimport calloc, free

# residues stay below 2**24, so a product of two fits in 48 bits
cdef enum:
    PRIME_LIMIT = 16777216


def jet_residues(int N, int order, const uint64_t[::1] primes,
                 const int64_t[::1] wanted, uint64_t[:, :, ::1] out):
    """Fill ``out[i, w, j]`` with Taylor coefficient ``j`` (at y=1) of
    ``J_{wanted[w]}`` modulo ``primes[i]``.

    ``wanted`` must be sorted, with entries in ``1..N``.
    """
    cdef Py_ssize_t P = primes.shape[0]
    cdef Py_ssize_t nw = wanted.shape[0]
    cdef int W = order + 1
    cdef uint64_t p, fact, s
    cdef uint64_t *E
    cdef uint64_t *T
    cdef uint64_t *inv
    cdef uint64_t cb[64]
    cdef uint64_t acc[64]
    cdef uint64_t *prev
    cdef uint64_t *tk
    cdef uint64_t *ek
    cdef Py_ssize_t pi, wi, n, k, i, j, cnt
    cdef Py_ssize_t chunk = 65535 // W - 1

    if W > 64:
        raise ValueError("order above 63 is not supported")
    if N < 1:
        raise ValueError("N must be >= 1")
    for pi in range(P):
        if primes[pi] >= PRIME_LIMIT or primes[pi] <= <uint64_t>N:
            raise ValueError("primes must lie in (N, 2**24)")
    for wi in range(nw):
        if wanted[wi] < 1 or wanted[wi] > N or (wi and wanted[wi] < wanted[wi - 1]):
            raise ValueError("wanted must be sorted and within 1..N")

    E = <uint64_t *> calloc(N * W, sizeof(uint64_t))
    T = <uint64_t *> calloc((N + 1) * W, sizeof(uint64_t))
    inv = <uint64_t *> calloc(N + 1, sizeof(uint64_t))
    if E == NULL or T == NULL or inv == NULL:
        free(E); free(T); free(inv)
        raise MemoryError()

    try:
        with nogil:
            for pi in range(P):
                p = primes[pi]
                inv[1] = 1
                for i in range(2, N + 1):
                    inv[i] = (p - (p // i) * inv[p % i] % p) % p
                for j in range(W):
                    cb[j] = 0
                    E[j] = 0
                cb[0] = 1
                E[0] = 1
                fact = 1
                wi = 0
                for n in range(1, N + 1):
                    # binomial row C(n, i), i <= order
                    i = order if order < n else n
                    while i > 0:
                        cb[i] = (cb[i] + cb[i - 1]) % p
                        i -= 1
                    fact = fact * n % p
                    prev = E + (n - 1) * W
                    while wi < nw and wanted[wi] == n:
                        for j in range(W):
                            out[pi, wi, j] = fact * prev[j] % p
                        wi += 1
                    if n == N:
                        break
                    # T_n = n * (jet of y^n) * E_{n-1}
                    tk = T + n * W
                    for j in range(W):
                        s = 0
                        for i in range(j + 1):
                            s += cb[i] * prev[j - i]
                        tk[j] = (s % p) * n % p
                    # E_n = (1/n) * sum_k T_k * E_{n-k}
                    for j in range(W):
                        acc[j] = 0
                    cnt = 0
                    for k in range(1, n + 1):
                        tk = T + k * W
                        ek = E + (n - k) * W
                        for j in range(W):
                            for i in range(j + 1):
                                acc[j] += tk[i] * ek[j - i]
                        cnt += 1
                        if cnt == chunk:
                            for j in range(W):
                                acc[j] %= p
                            cnt = 0
                    ek = E + n * W
                    for j in range(W):
                        ek[j] = (acc[j] % p) * inv[n] % p
    finally:
        free(E)
        free(T)
        free(inv)


def total_heights(const int64_t[:, ::1] seqs, const int64_t[::1] roots,
                  int n, int64_t[::1] out):
    """Total height of each rooted tree given by a 0-based Prüfer row and root."""
    cdef Py_ssize_t B = roots.shape[0]
    cdef Py_ssize_t L = n - 2
    cdef Py_ssize_t b, t, v, u, ptr, leaf, e, head, tail
    cdef int64_t x, total
    cdef int64_t *deg
    cdef int64_t *eu
    cdef int64_t *ev
    cdef int64_t *start
    cdef int64_t *adj
    cdef int64_t *fill
    cdef int64_t *depth
    cdef int64_t *queue

    if n < 1:
        raise ValueError("n must be >= 1")
    if n == 1:
        for b in range(B):
            out[b] = 0
        return
    if seqs.shape[0] != B or seqs.shape[1] != L:
        raise ValueError("seqs must have shape (len(roots), n - 2)")

    deg = <int64_t *> calloc(n, sizeof(int64_t))
    eu = <int64_t *> calloc(n, sizeof(int64_t))
    ev = <int64_t *> calloc(n, sizeof(int64_t))
    start = <int64_t *> calloc(n + 1, sizeof(int64_t))
    adj = <int64_t *> calloc(2 * n, sizeof(int64_t))
    fill = <int64_t *> calloc(n, sizeof(int64_t))
    depth = <int64_t *> calloc(n, sizeof(int64_t))
    queue = <int64_t *> calloc(n, sizeof(int64_t))
    try:
        if (deg == NULL or eu == NULL or ev == NULL or start == NULL or adj == NULL
                or fill == NULL or depth == NULL or queue == NULL):
            raise MemoryError()
        with nogil:
            for b in range(B):
                for v in range(n):
                    deg[v] = 1
                for t in range(L):
                    deg[seqs[b, t]] += 1
                ptr = 0
                while deg[ptr] != 1:
                    ptr += 1
                leaf = ptr
                for t in range(L):
                    x = seqs[b, t]
                    eu[t] = leaf
                    ev[t] = x
                    deg[x] -= 1
                    if deg[x] == 1 and x < ptr:
                        leaf = x
                    else:
                        ptr += 1
                        while deg[ptr] != 1:
                            ptr += 1
                        leaf = ptr
                eu[L] = leaf
                ev[L] = n - 1
                # adjacency in CSR form
                for v in range(n + 1):
                    start[v] = 0
                for e in range(n - 1):
                    start[eu[e] + 1] += 1
                    start[ev[e] + 1] += 1
                for v in range(n):
                    start[v + 1] += start[v]
                    fill[v] = start[v]
                for e in range(n - 1):
                    adj[fill[eu[e]]] = ev[e]
                    fill[eu[e]] += 1
                    adj[fill[ev[e]]] = eu[e]
                    fill[ev[e]] += 1
                # breadth-first depths from the root
                for v in range(n):
                    depth[v] = -1
                head = 0
                tail = 1
                queue[0] = roots[b]
                depth[roots[b]] = 0
                total = 0
                while head < tail:
                    v = queue[head]
                    head += 1
                    total += depth[v]
                    for e in range(start[v], start[v + 1]):
                        u = adj[e]
                        if depth[u] < 0:
                            depth[u] = depth[v] + 1
                            queue[tail] = u
                            tail += 1
                out[b] = total
    finally:
        free(deg); free(eu); free(ev); free(start)
        free(adj); free(fill); free(depth); free(queue)
