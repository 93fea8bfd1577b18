"""Brute-force ground truth: exhaustive rooted labeled trees via Prüfer codes.

Labels are ``1..n`` throughout the public API.
"""

from __future__ import annotations

import heapq
import itertools
from collections import Counter
from dataclasses import dataclass
from typing import Iterator, Mapping, Sequence

import numpy as np

from . import _kernels

ENUMERATION_BOUND = 8
LARGE_ENUMERATION_BOUND = 9


@dataclass(frozen=True)
class RootedTree:
    n: int
    root: int
    parent: Mapping[int, int]

    def __post_init__(self):
        if not 1 <= self.root <= self.n:
            raise ValueError("root label out of range")
        if len(self.parent) != self.n - 1 or self.root in self.parent:
            raise ValueError("need exactly one parent for every non-root vertex")
        for v in range(1, self.n + 1):
            seen = set()
            while v != self.root:
                if v in seen or v not in self.parent:
                    raise ValueError("parent map is not a tree rooted at root")
                seen.add(v)
                v = self.parent[v]

    def key(self) -> tuple:
        return (self.root, tuple(sorted(self.parent.items())))

    def depths(self) -> dict[int, int]:
        depth = {self.root: 0}
        for v in range(1, self.n + 1):
            path = []
            while v not in depth:
                path.append(v)
                v = self.parent[v]
            d = depth[v]
            for u in reversed(path):
                d += 1
                depth[u] = d
        return depth


@dataclass(frozen=True)
class HeightDistribution:
    n: int
    counts: Mapping[int, int]

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    def moment_sums(self, k: int) -> int:
        return sum(c * h**k for h, c in self.counts.items())


def _check_size(n: int, allow_large: bool) -> None:
    bound = LARGE_ENUMERATION_BOUND if allow_large else ENUMERATION_BOUND
    if not 1 <= n <= bound:
        hint = "" if allow_large else " (n=9 needs allow_large=True)"
        raise ValueError(f"exhaustive enumeration supports 1 <= n <= {bound}{hint}")


def prufer_decode(seq: Sequence[int], n: int) -> list[tuple[int, int]]:
    """Edges ``(u, v)`` of the labeled tree with Prüfer sequence ``seq``."""
    if n < 2:
        raise ValueError("Prüfer decoding needs n >= 2")
    if len(seq) != n - 2:
        raise ValueError(f"Prüfer sequence for n={n} must have length {n - 2}")
    if any(not 1 <= x <= n for x in seq):
        raise ValueError(f"Prüfer entries must lie in 1..{n}")
    degree = [1] * (n + 1)
    for x in seq:
        degree[x] += 1
    leaves = [v for v in range(1, n + 1) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for x in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    edges.append((heapq.heappop(leaves), heapq.heappop(leaves)))
    return edges


def prufer_encode(edges: Sequence[tuple[int, int]], n: int) -> list[int]:
    adj: dict[int, set[int]] = {v: set() for v in range(1, n + 1)}
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    leaves = [v for v in adj if len(adj[v]) == 1]
    heapq.heapify(leaves)
    seq = []
    for _ in range(n - 2):
        leaf = heapq.heappop(leaves)
        (nb,) = adj[leaf]
        seq.append(nb)
        adj[nb].discard(leaf)
        if len(adj[nb]) == 1:
            heapq.heappush(leaves, nb)
    return seq


def root_tree(edges: Sequence[tuple[int, int]], n: int, root: int) -> RootedTree:
    adj: dict[int, list[int]] = {v: [] for v in range(1, n + 1)}
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    parent = {}
    stack = [root]
    seen = {root}
    while stack:
        v = stack.pop()
        for u in adj[v]:
            if u not in seen:
                seen.add(u)
                parent[u] = v
                stack.append(u)
    return RootedTree(n, root, parent)


def enumerate_rooted_trees(n: int, allow_large: bool = False) -> Iterator[RootedTree]:
    """Every rooted labeled tree on ``n`` vertices, each exactly once."""
    _check_size(n, allow_large)
    if n == 1:
        yield RootedTree(1, 1, {})
        return
    for seq in itertools.product(range(1, n + 1), repeat=n - 2):
        edges = prufer_decode(seq, n)
        for root in range(1, n + 1):
            yield root_tree(edges, n, root)


def total_height(t: RootedTree) -> int:
    return sum(t.depths().values())


def exact_distribution(n: int, allow_large: bool = False) -> HeightDistribution:
    """Counts of rooted trees by total height, by exhaustion over all codes."""
    _check_size(n, allow_large)
    if n == 1:
        return HeightDistribution(1, {0: 1})
    counts: Counter = Counter()
    L = n - 2
    # rows of the full code table in blocks keyed by a leading prefix
    prefix_len = max(0, L - 5)
    rows = list(itertools.product(range(n), repeat=L - prefix_len))
    tail = np.array(rows, dtype=np.int64).reshape(len(rows), L - prefix_len)
    roots = np.repeat(np.arange(n, dtype=np.int64), len(tail))
    for prefix in itertools.product(range(n), repeat=prefix_len):
        block = np.hstack([np.tile(np.array(prefix, dtype=np.int64), (len(tail), 1)), tail])
        seqs = np.tile(block, (n, 1))
        heights = _kernels.total_heights(seqs, roots, n)
        values, freq = np.unique(heights, return_counts=True)
        counts.update(dict(zip(values.tolist(), freq.tolist())))
    return HeightDistribution(n, dict(sorted(counts.items())))


def sample_tree(n: int, rng: np.random.Generator) -> RootedTree:
    """Uniform rooted labeled tree: uniform Prüfer code and independent root."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if n == 1:
        return RootedTree(1, 1, {})
    seq = (rng.integers(0, n, size=n - 2) + 1).tolist()
    root = int(rng.integers(0, n)) + 1
    return root_tree(prufer_decode(seq, n), n, root)


def sample_total_heights(n: int, count: int, rng: np.random.Generator,
                         block: int = 4096) -> np.ndarray:
    """Total heights of ``count`` uniform rooted trees, drawn in fixed-size blocks."""
    out = np.empty(count, dtype=np.int64)
    done = 0
    while done < count:
        b = min(block, count - done)
        seqs = rng.integers(0, n, size=(b, max(n - 2, 0)))
        roots = rng.integers(0, n, size=b)
        out[done : done + b] = _kernels.total_heights(seqs, roots, n)
        done += b
    return out
