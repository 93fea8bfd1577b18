"""Glue around the compiled kernels.

The jet recurrence runs modulo a set of primes below ``2**24`` and the exact
integers are rebuilt by Chinese remaindering. Every value is nonnegative and
bounded by ``n^(n-1) * C(n(n-1)/2, j)``, so enough primes make the
reconstruction exact; one spare prime is kept back as a consistency check.
"""

from __future__ import annotations

import math
from functools import lru_cache

import numpy as np

from . import _fast

BACKEND = "compiled"

PRIME_BITS = 24
_LIMIT = 1 << PRIME_BITS
_primes: list[int] = []
_sieved_down_to = _LIMIT


def _extend_primes(count: int) -> list[int]:
    """The ``count`` largest primes below ``2**24``, in descending order."""
    global _sieved_down_to
    small = _small_primes(1 << (PRIME_BITS // 2 + 1))
    while len(_primes) < count:
        hi = _sieved_down_to
        lo = hi - (1 << 16)
        sieve = bytearray([1]) * (hi - lo)
        for q in small:
            first = (lo + q - 1) // q * q
            sieve[first - lo :: q] = bytes(len(range(first - lo, hi - lo, q)))
        _primes.extend(lo + i for i in range(hi - lo - 1, -1, -1) if sieve[i])
        _sieved_down_to = lo
    return _primes[:count]


@lru_cache(maxsize=None)
def _small_primes(limit: int) -> tuple[int, ...]:
    flags = bytearray([1]) * (limit + 1)
    flags[0:2] = b"\x00\x00"
    for i in range(2, math.isqrt(limit) + 1):
        if flags[i]:
            flags[i * i :: i] = bytes(len(range(i * i, limit + 1, i)))
    return tuple(i for i, f in enumerate(flags) if f)


def value_bound(n: int, order: int) -> int:
    return n ** (n - 1) * math.comb(n * (n - 1) // 2, order) if order else n ** (n - 1)


def _primes_needed(bound: int) -> int:
    # each prime exceeds 2**23
    return bound.bit_length() // (PRIME_BITS - 1) + 1


@lru_cache(maxsize=8)
def _crt_basis(count: int) -> tuple[int, tuple[int, ...]]:
    primes = _extend_primes(count)
    M = math.prod(primes)
    basis = []
    for p in primes:
        Mi = M // p
        basis.append(Mi * pow(Mi % p, -1, p))
    return M, tuple(basis)


def jet_table(N: int, order: int, wanted) -> dict[int, tuple[int, ...]]:
    """Taylor coefficients at ``y = 1`` of ``J_n(y)`` for each ``n`` in ``wanted``."""
    wanted = sorted(set(int(n) for n in wanted))
    if N < 1 or any(n < 1 or n > N for n in wanted):
        raise ValueError("wanted sizes must lie in 1..N")
    if (order + 1) > 63 or N >= _LIMIT >> 1:
        raise ValueError("size or order out of the compiled kernel's range")
    if not wanted:
        return {}
    bound = max(value_bound(n, j) for n in wanted for j in range(order + 1))
    count = _primes_needed(bound)
    primes = _extend_primes(count + 1)
    residues = np.zeros((count + 1, len(wanted), order + 1), dtype=np.uint64)
    _fast.jet_residues(
        N,
        order,
        np.asarray(primes, dtype=np.uint64),
        np.asarray(wanted, dtype=np.int64),
        residues,
    )
    M, basis = _crt_basis(count)
    spare = primes[count]
    res = residues.tolist()
    out = {}
    for w, n in enumerate(wanted):
        coeffs = []
        for j in range(order + 1):
            x = sum(res[i][w][j] * basis[i] for i in range(count)) % M
            if x % spare != res[count][w][j]:
                raise ArithmeticError(
                    f"residue check failed for n={n}, j={j}; bound too small"
                )
            coeffs.append(x)
        out[n] = tuple(coeffs)
    return out


def total_heights(seqs: np.ndarray, roots: np.ndarray, n: int) -> np.ndarray:
    """Total height of each rooted tree given by a 0-based Prüfer row and root."""
    seqs = np.ascontiguousarray(seqs, dtype=np.int64).reshape(len(roots), max(n - 2, 0))
    roots = np.ascontiguousarray(roots, dtype=np.int64)
    out = np.empty(len(roots), dtype=np.int64)
    _fast.total_heights(seqs, roots, n, out)
    return out
