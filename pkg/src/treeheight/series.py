"""Truncated power series in ``x`` over an exact coefficient ring.

Coefficients may be rationals, :class:`~treeheight.algebra.YPolynomial` or
:class:`~treeheight.algebra.Jet` values; every series carries one ring only.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Sequence

from .algebra import Jet, YPolynomial, as_rational


def ring_signature(c) -> tuple:
    if isinstance(c, YPolynomial):
        return ("poly",)
    if isinstance(c, Jet):
        return ("jet", c.order)
    as_rational(c)
    return ("rational",)


def ring_zero(c):
    return c * 0


def ring_one(c):
    return c * 0 + 1


class TruncatedSeries:
    """``coeffs[n]`` is the coefficient of ``x**n`` for ``n = 0..order``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence):
        coeffs = tuple(
            c if isinstance(c, (YPolynomial, Jet)) else as_rational(c) for c in coeffs
        )
        if not coeffs:
            raise ValueError("a truncated series needs at least one coefficient")
        sig = ring_signature(coeffs[0])
        for c in coeffs[1:]:
            if ring_signature(c) != sig:
                raise TypeError(
                    f"mixed coefficient rings: {sig} and {ring_signature(c)}"
                )
        self.coeffs = coeffs

    @classmethod
    def _raw(cls, coeffs) -> "TruncatedSeries":
        obj = cls.__new__(cls)
        obj.coeffs = tuple(coeffs)
        return obj

    @classmethod
    def from_function(cls, f, order: int) -> "TruncatedSeries":
        return cls([f(n) for n in range(order + 1)])

    @classmethod
    def variable(cls, order: int, one=1) -> "TruncatedSeries":
        """The series ``x`` (``one`` picks the ring)."""
        zero = ring_zero(one)
        return cls([zero, one] + [zero] * (order - 1) if order >= 1 else [zero])

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @property
    def ring(self) -> tuple:
        return ring_signature(self.coeffs[0])

    def __getitem__(self, n: int):
        if not 0 <= n <= self.order:
            raise IndexError(f"coefficient {n} is beyond truncation order {self.order}")
        return self.coeffs[n]

    def __len__(self):
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def truncate(self, order: int) -> "TruncatedSeries":
        if order > self.order:
            raise ValueError(f"cannot extend truncation order {self.order} to {order}")
        return TruncatedSeries._raw(self.coeffs[: order + 1])

    def _check(self, other: "TruncatedSeries"):
        if not isinstance(other, TruncatedSeries):
            raise TypeError("expected a TruncatedSeries")
        if other.order != self.order:
            raise ValueError(
                f"truncation order mismatch: {self.order} vs {other.order}"
            )
        if other.ring != self.ring:
            raise TypeError(f"ring mismatch: {self.ring} vs {other.ring}")

    def __add__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        self._check(other)
        return TruncatedSeries._raw([a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        self._check(other)
        return TruncatedSeries._raw([a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self):
        return TruncatedSeries._raw([-c for c in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, TruncatedSeries):
            return series_mul(self, other)
        return TruncatedSeries._raw([c * other for c in self.coeffs])

    def __rmul__(self, other):
        return TruncatedSeries._raw([other * c for c in self.coeffs])

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"TruncatedSeries({list(self.coeffs)!r})"


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    a._check(b)
    ac, bc = a.coeffs, b.coeffs
    out = []
    for n in range(len(ac)):
        acc = ac[0] * bc[n]
        for k in range(1, n + 1):
            acc = acc + ac[k] * bc[n - k]
        out.append(acc)
    return TruncatedSeries._raw(out)


def series_derivative(a: TruncatedSeries) -> TruncatedSeries:
    """d/dx; the result is exact through order ``N - 1``."""
    if a.order == 0:
        return TruncatedSeries._raw([ring_zero(a.coeffs[0])])
    return TruncatedSeries._raw([n * a.coeffs[n] for n in range(1, a.order + 1)])


def series_times_x(a: TruncatedSeries) -> TruncatedSeries:
    """Multiply by ``x``; exact through order ``N + 1``."""
    return TruncatedSeries._raw((ring_zero(a.coeffs[0]),) + a.coeffs)


def series_shift_y(a: TruncatedSeries) -> TruncatedSeries:
    """Substitute ``x -> x*y``: the ``x**n`` coefficient is multiplied by ``y**n``."""
    return TruncatedSeries._raw([c.times_y_power(n) for n, c in enumerate(a.coeffs)])


class IncrementalExp:
    """Coefficients of ``exp(A(x))`` produced as those of ``A`` arrive.

    In ordinary mode ``push(a_m)`` takes ``[x^m] A`` and returns ``[x^m] exp(A)``
    via ``m E_m = sum_k k a_k E_(m-k)``; one coefficient of ``A`` determines
    one new coefficient of the exponential, so triangular fixed points can be
    solved in a single pass.

    In ``egf`` mode both sides are exponential-generating numerators
    (``A = sum a_m x^m/m!``) and ``E_m = sum_k C(m-1, k-1) a_k E_(m-k)``, which
    needs no division at all.
    """

    def __init__(self, one, egf: bool = False):
        self.egf = egf
        self._one = one
        self._terms = [ring_zero(one)]  # k*a_k (ordinary) or a_k (egf)
        self.values = [one]

    def push(self, a_m):
        m = len(self.values)
        if self.egf:
            self._terms.append(a_m)
            acc = ring_zero(self._one)
            for k in range(1, m + 1):
                acc = acc + math.comb(m - 1, k - 1) * (self._terms[k] * self.values[m - k])
        else:
            self._terms.append(m * a_m)
            acc = ring_zero(self._one)
            for k in range(1, m + 1):
                acc = acc + self._terms[k] * self.values[m - k]
            acc = acc * Fraction(1, m)
        self.values.append(acc)
        return acc


def series_exp(a: TruncatedSeries) -> TruncatedSeries:
    """exp(a) through the truncation order; requires a zero constant term."""
    if a.coeffs[0] != 0:
        raise ValueError("series_exp needs a zero constant term")
    e = IncrementalExp(ring_one(a.coeffs[0]))
    for c in a.coeffs[1:]:
        e.push(c)
    return TruncatedSeries._raw(e.values)


def geometric_series(a: TruncatedSeries) -> TruncatedSeries:
    """``1/(1 - a) = 1 + a + a^2 + ...`` for ``a`` with zero constant term."""
    if a.coeffs[0] != 0:
        raise ValueError("geometric_series needs a zero constant term")
    one = ring_one(a.coeffs[0])
    out = [one]
    for n in range(1, a.order + 1):
        acc = ring_zero(one)
        for k in range(1, n + 1):
            acc = acc + a.coeffs[k] * out[n - k]
        out.append(acc)
    return TruncatedSeries._raw(out)


def exp_of_multiple(c: int, order: int) -> TruncatedSeries:
    """exp(c*z) built with :func:`series_exp` rather than the closed form."""
    if order == 0:
        return TruncatedSeries([1])
    return series_exp(TruncatedSeries([0, c] + [0] * (order - 1)))


def lagrange_coeff(n: int):
    """``[x^n] R`` for ``R = x exp(R)``, i.e. ``(1/n) [z^(n-1)] exp(n z)``."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return as_rational(exp_of_multiple(n, n - 1)[n - 1] * Fraction(1, n))


def generalized_lagrange_coeff(g_prime: TruncatedSeries, n: int):
    """``[t^n] G(u)`` for ``u = t exp(u)``, given the series of ``G'(z)``.

    Returns ``(1/n) [z^(n-1)] G'(z) exp(n z)``.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if g_prime.order < n - 1:
        raise ValueError(
            f"G' is truncated at order {g_prime.order}; need at least {n - 1}"
        )
    product = series_mul(g_prime.truncate(n - 1), exp_of_multiple(n, n - 1))
    return as_rational(product[n - 1] * Fraction(1, n))


def rational_function_series(num: Sequence, den_root_power: int, order: int) -> TruncatedSeries:
    """Expand ``num(z) / (1 - z)**p`` via repeated geometric series."""
    z = TruncatedSeries.variable(order)
    geo = geometric_series(z)
    out = TruncatedSeries(list(num)[: order + 1] + [0] * max(0, order + 1 - len(num)))
    for _ in range(den_root_power):
        out = series_mul(out, geo)
    return out
