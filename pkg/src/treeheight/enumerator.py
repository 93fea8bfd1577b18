"""Weight enumerators ``J_n(y)`` and factorial moments from ``J(x,y) = x exp(J(xy,y))``.

The equation is triangular: the ``x^n`` coefficient of the right side only
involves ``J_1 .. J_(n-1)``, so one incremental exponential solves it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional, Sequence

from . import _kernels
from .algebra import Jet, Number, YPolynomial
from .series import IncrementalExp, TruncatedSeries

POLYNOMIAL_BOUND = 60


@dataclass(frozen=True)
class EnumeratorResult:
    n: int
    factorial_moments: tuple[int, ...]
    J_n: Optional[YPolynomial] = field(default=None, compare=False)

    def __post_init__(self):
        if self.factorial_moments[0] != self.n ** (self.n - 1):
            raise ArithmeticError(f"J_{self.n}(1) is not {self.n}^{self.n - 1}")
        if any(f < 0 for f in self.factorial_moments):
            raise ArithmeticError("negative factorial moment")

    @property
    def max_order(self) -> int:
        return len(self.factorial_moments) - 1


def compute_R(N: int) -> TruncatedSeries:
    """``R(x) = x exp(R(x))`` through ``x^N``, one coefficient at a time."""
    if N < 1:
        raise ValueError("N must be >= 1")
    coeffs: list[Number] = [0]
    e = IncrementalExp(1)
    for n in range(1, N + 1):
        # [x^n] R = [x^(n-1)] exp(R_1 x + ... + R_(n-1) x^(n-1))
        coeffs.append(e.values[n - 1])
        if n < N:
            e.push(coeffs[n])
    return TruncatedSeries(coeffs)


def solve_fe(one, N: int) -> list:
    """``J_1 .. J_N`` over the ring of ``one`` (rationals, polynomials or jets).

    Works on exponential numerators so integer-valued rings stay integral:
    ``J_n = n B_(n-1)`` where ``B`` are the numerators of ``exp(J(xy, y))``.
    """
    e = IncrementalExp(one, egf=True)
    out = []
    for n in range(1, N + 1):
        J_n = n * e.values[n - 1]
        out.append(J_n)
        if n < N:
            e.push(J_n.times_y_power(n) if hasattr(J_n, "times_y_power") else J_n)
    return out


def compute_J_polynomials(N: int) -> list[YPolynomial]:
    """``[J_1(y), ..., J_N(y)]`` exactly."""
    if N < 1:
        raise ValueError("N must be >= 1")
    return solve_fe(YPolynomial([1]), N)


def J_polynomial(n: int, bound: int = POLYNOMIAL_BOUND) -> YPolynomial:
    if n > bound:
        raise ValueError(
            f"n={n} exceeds the polynomial bound {bound}; use factorial moments (jets)"
        )
    return compute_J_polynomials(n)[-1]


def _from_taylor(n: int, taylor: Sequence[int]) -> EnumeratorResult:
    return EnumeratorResult(
        n, tuple(c * math.factorial(j) for j, c in enumerate(taylor))
    )


def compute_factorial_moments(
    n: int, max_order: int, method: str = "kernel"
) -> EnumeratorResult:
    """``J_n^(r)(1)`` for ``r = 0..max_order``.

    ``method="kernel"`` uses the integer jet recurrence (compiled when
    available); ``"ring"`` runs :func:`solve_fe` over :class:`Jet` values;
    ``"polynomial"`` differentiates the full ``J_n(y)``.
    """
    if n < 1 or max_order < 0:
        raise ValueError("need n >= 1 and max_order >= 0")
    if method == "kernel":
        return _from_taylor(n, _kernels.jet_table(n, max_order, [n])[n])
    if method == "ring":
        jet = solve_fe(Jet.constant(1, max_order), n)[-1]
        return _from_taylor(n, jet.coeffs)
    if method == "polynomial":
        p = J_polynomial(n)
        derivs = []
        q = p
        for _ in range(max_order + 1):
            derivs.append(q(1))
            q = q.derivative()
        return EnumeratorResult(n, tuple(derivs), J_n=p)
    raise ValueError(f"unknown method {method!r}")


def factorial_moment_sweep(
    sizes: Sequence[int], max_order: int
) -> dict[int, EnumeratorResult]:
    """Factorial moments for several sizes from one recurrence pass."""
    if not sizes:
        return {}
    table = _kernels.jet_table(max(sizes), max_order, sizes)
    return {n: _from_taylor(n, t) for n, t in table.items()}
