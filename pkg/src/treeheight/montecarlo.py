"""Reproducible Monte Carlo over uniform rooted labeled trees.

Worker ``i`` of ``w`` draws from ``SeedSequence(seed).spawn(w)[i]`` and owns a
fixed share of the samples, so output depends only on ``(seed, workers)``.
Statistics are merged from exact integer power sums.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .oracle import sample_total_heights


def _shares(samples: int, workers: int) -> list[int]:
    base, extra = divmod(samples, workers)
    return [base + (i < extra) for i in range(workers)]


def _worker(args) -> np.ndarray:
    n, count, seed_seq = args
    return sample_total_heights(n, count, np.random.default_rng(seed_seq))


def draw_total_heights(n: int, samples: int, seed: int = 0, workers: int = 1) -> np.ndarray:
    """Total heights of ``samples`` uniform rooted trees on ``n`` vertices."""
    if samples < 1:
        raise ValueError("samples must be >= 1")
    if workers < 1:
        raise ValueError("workers must be >= 1")
    streams = np.random.SeedSequence(seed).spawn(workers)
    jobs = [(n, c, s) for c, s in zip(_shares(samples, workers), streams)]
    if workers == 1:
        parts = [_worker(jobs[0])]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_worker, jobs))
    return np.concatenate(parts)


@dataclass(frozen=True)
class PowerSums:
    count: int
    s1: int
    s2: int
    s3: int
    s4: int

    @classmethod
    def of(cls, values) -> "PowerSums":
        xs = [int(v) for v in np.asarray(values).tolist()]
        return cls(
            len(xs),
            sum(xs),
            sum(x * x for x in xs),
            sum(x**3 for x in xs),
            sum(x**4 for x in xs),
        )

    def __add__(self, other: "PowerSums") -> "PowerSums":
        return PowerSums(
            self.count + other.count,
            self.s1 + other.s1,
            self.s2 + other.s2,
            self.s3 + other.s3,
            self.s4 + other.s4,
        )

    def central(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        """Mean and the empirical central moments of orders 2, 3, 4."""
        N = self.count
        m = Fraction(self.s1, N)
        r2 = Fraction(self.s2, N)
        r3 = Fraction(self.s3, N)
        r4 = Fraction(self.s4, N)
        c2 = r2 - m**2
        c3 = r3 - 3 * m * r2 + 2 * m**3
        c4 = r4 - 4 * m * r3 + 6 * m**2 * r2 - 3 * m**4
        return m, c2, c3, c4


def sample_statistics(heights, n: int) -> dict:
    """Mean, variance, skewness and kurtosis (non-excess) with standard errors."""
    ps = PowerSums.of(heights)
    N = ps.count
    m, c2, c3, c4 = ps.central()
    var = float(c2)
    stats = {
        "samples": N,
        "mean": float(m),
        "mean_se": math.sqrt(var / N),
        "scaled_mean": float(m) / n**1.5,
        "scaled_mean_se": math.sqrt(var / N) / n**1.5,
        "variance": var,
        "variance_se": math.sqrt(max(float(c4 - c2**2), 0.0) / N),
        "skewness": None,
        "skewness_se": None,
        "kurtosis": None,
        "kurtosis_se": None,
    }
    if c2 > 0:
        stats["skewness"] = float(c3) / var**1.5
        stats["kurtosis"] = float(c4 / c2**2)
    if N > 3:
        se_skew = math.sqrt(6 * N * (N - 1) / ((N - 2) * (N + 1) * (N + 3)))
        stats["skewness_se"] = se_skew
        stats["kurtosis_se"] = 2 * se_skew * math.sqrt((N * N - 1) / ((N - 3) * (N + 5)))
    return stats


@dataclass(frozen=True)
class Histogram:
    edges: np.ndarray
    counts: np.ndarray
    density: np.ndarray

    @property
    def mass(self) -> float:
        return float(np.sum(self.density * np.diff(self.edges)))

    @property
    def mode(self) -> float:
        i = int(np.argmax(self.counts))
        return float((self.edges[i] + self.edges[i + 1]) / 2)


def scaled_histogram(heights, n: int, bins: int = 100) -> Histogram:
    """Histogram of ``X / n^(3/2)`` over the observed range."""
    if bins < 1:
        raise ValueError("bins must be >= 1")
    x = np.asarray(heights, dtype=np.float64) / n**1.5
    lo, hi = float(x.min()), float(x.max())
    if lo == hi:
        pad = 0.5 / n**1.5
        lo, hi = lo - pad, hi + pad
    edges = np.linspace(lo, hi, bins + 1)
    counts, _ = np.histogram(x, bins=edges)
    density = counts / (len(x) * np.diff(edges))
    return Histogram(edges, counts, density)
