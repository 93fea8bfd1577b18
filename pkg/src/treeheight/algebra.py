"""Exact coefficient rings.

Three rings are provided, all immutable:

* rationals -- :class:`fractions.Fraction` (plain ``int`` is accepted and kept
  wherever a value is integral, which keeps integer-valued work fast);
* :class:`YPolynomial` -- dense polynomials in ``y`` with rational coefficients;
* :class:`Jet` -- truncated Taylor expansions at ``y = 1`` of a fixed order.

Each ring exposes ``+``, ``-``, ``*`` (with ring elements and with rational
scalars) and ``times_y_power(n)``, which is all the series engine needs.
"""

from __future__ import annotations

import math
from fractions import Fraction
from numbers import Rational as _RationalABC
from typing import Iterable, Sequence, Union

Rational = Fraction
Number = Union[int, Fraction]

# Above this many coefficient pairs, integer products go through Kronecker
# substitution instead of the schoolbook loop.
_KRONECKER_THRESHOLD = 400


def as_rational(x) -> Number:
    """Canonical exact scalar: ``int`` when integral, else ``Fraction``."""
    if isinstance(x, bool):
        return int(x)
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else x
    if isinstance(x, _RationalABC):
        return as_rational(Fraction(x.numerator, x.denominator))
    raise TypeError(f"exact rational expected, got {type(x).__name__}")


def _is_scalar(x) -> bool:
    return isinstance(x, _RationalABC)


def _strip(coeffs: list) -> tuple:
    end = len(coeffs)
    while end and coeffs[end - 1] == 0:
        end -= 1
    return tuple(coeffs[:end])


# -- integer polynomial products ------------------------------------------------


def _pack(coeffs: Sequence[int], nbytes: int) -> int:
    return int.from_bytes(
        b"".join(c.to_bytes(nbytes, "little") for c in coeffs), "little"
    )


def _unpack(x: int, nbytes: int, count: int) -> list[int]:
    raw = x.to_bytes(nbytes * count, "little")
    return [
        int.from_bytes(raw[i * nbytes : (i + 1) * nbytes], "little")
        for i in range(count)
    ]


def _kronecker_nonneg(a: Sequence[int], b: Sequence[int]) -> list[int]:
    bound = min(len(a), len(b)) * max(a) * max(b)
    nbytes = bound.bit_length() // 8 + 1
    count = len(a) + len(b) - 1
    return _unpack(_pack(a, nbytes) * _pack(b, nbytes), nbytes, count)


def _schoolbook(a: Sequence, b: Sequence) -> list:
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return out


def _int_mul(a: Sequence[int], b: Sequence[int]) -> list[int]:
    if len(a) * len(b) < _KRONECKER_THRESHOLD:
        return _schoolbook(a, b)
    if min(a) >= 0 and min(b) >= 0:
        if max(a) == 0 or max(b) == 0:
            return [0] * (len(a) + len(b) - 1)
        return _kronecker_nonneg(a, b)
    # split into nonnegative parts: (a+ - a-)(b+ - b-)
    ap = [max(c, 0) for c in a]
    an = [max(-c, 0) for c in a]
    bp = [max(c, 0) for c in b]
    bn = [max(-c, 0) for c in b]
    out = [0] * (len(a) + len(b) - 1)
    for x, y, sign in ((ap, bp, 1), (an, bn, 1), (ap, bn, -1), (an, bp, -1)):
        if max(x) and max(y):
            for k, c in enumerate(_kronecker_nonneg(x, y)):
                out[k] += sign * c
    return out


def _rational_mul(a: Sequence[Number], b: Sequence[Number]) -> list[Number]:
    da = math.lcm(*(Fraction(c).denominator for c in a))
    db = math.lcm(*(Fraction(c).denominator for c in b))
    if da == 1 and db == 1:
        return _int_mul(a, b)
    ia = [int(c * da) for c in a]
    ib = [int(c * db) for c in b]
    scale = da * db
    return [as_rational(Fraction(c, scale)) for c in _int_mul(ia, ib)]


# -- polynomials in y -----------------------------------------------------------


class YPolynomial:
    """Dense polynomial in ``y``; ``coeffs[k]`` is the coefficient of ``y**k``.

    Trailing zeros are stripped, so the zero polynomial has no coefficients.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        self.coeffs = _strip([as_rational(c) for c in coeffs])

    @classmethod
    def _raw(cls, coeffs) -> "YPolynomial":
        obj = cls.__new__(cls)
        obj.coeffs = _strip(list(coeffs))
        return obj

    @classmethod
    def monomial(cls, k: int, c: Number = 1) -> "YPolynomial":
        return cls([0] * k + [c])

    @classmethod
    def from_map(cls, terms: dict[int, Number]) -> "YPolynomial":
        if not terms:
            return cls()
        out = [0] * (max(terms) + 1)
        for k, c in terms.items():
            out[k] = c
        return cls(out)

    @property
    def degree(self) -> int:
        """Degree; ``-1`` for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def valuation(self) -> int:
        """Smallest exponent with a nonzero coefficient; ``-1`` for zero."""
        for k, c in enumerate(self.coeffs):
            if c:
                return k
        return -1

    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, k: int) -> Number:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def as_map(self) -> dict[int, Number]:
        return {k: c for k, c in enumerate(self.coeffs) if c}

    def _coerce(self, other) -> "YPolynomial":
        if isinstance(other, YPolynomial):
            return other
        if _is_scalar(other):
            return YPolynomial([other])
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for k, c in enumerate(b):
            out[k] += c
        return YPolynomial._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return YPolynomial._raw([-c for c in self.coeffs])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if _is_scalar(other):
            c = as_rational(other)
            if c == 0:
                return YPolynomial()
            return YPolynomial._raw([as_rational(c * a) for a in self.coeffs])
        if not isinstance(other, YPolynomial):
            return NotImplemented
        return poly_mul(self, other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if not _is_scalar(other):
            return NotImplemented
        inv = Fraction(1) / Fraction(other)
        return self * inv

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        out = YPolynomial([1])
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(("YPolynomial", self.coeffs))

    def __call__(self, v) -> Number:
        return poly_eval(self, v)

    def derivative(self) -> "YPolynomial":
        return poly_derivative(self)

    def times_y_power(self, n: int) -> "YPolynomial":
        if not self.coeffs:
            return self
        return YPolynomial._raw([0] * n + list(self.coeffs))

    def to_jet(self, order: int) -> "Jet":
        """Taylor coefficients at ``y = 1``: entry ``j`` is ``p^(j)(1) / j!``."""
        out = []
        for j in range(order + 1):
            out.append(sum(math.comb(k, j) * c for k, c in enumerate(self.coeffs)))
        return Jet(out)

    def __repr__(self):
        if not self.coeffs:
            return "YPolynomial(0)"
        terms = [f"{c}*y^{k}" for k, c in enumerate(self.coeffs) if c]
        return "YPolynomial(" + " + ".join(terms) + ")"


def poly_mul(a: YPolynomial, b: YPolynomial) -> YPolynomial:
    if not a.coeffs or not b.coeffs:
        return YPolynomial()
    return YPolynomial._raw(_rational_mul(a.coeffs, b.coeffs))


def poly_derivative(p: YPolynomial) -> YPolynomial:
    return YPolynomial._raw([k * c for k, c in enumerate(p.coeffs)][1:])


def poly_eval(p: YPolynomial, v) -> Number:
    v = as_rational(v)
    acc: Number = 0
    for c in reversed(p.coeffs):
        acc = acc * v + c
    return as_rational(acc)


# -- jets at y = 1 --------------------------------------------------------------


class Jet:
    """Truncated Taylor expansion at ``y = 1``.

    With ``y = 1 + eps``, ``coeffs[j]`` is the coefficient of ``eps**j`` for
    ``j = 0..order``. Jets of different orders never mix.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable):
        self.coeffs = tuple(as_rational(c) for c in coeffs)
        if not self.coeffs:
            raise ValueError("a jet needs at least its order-0 coefficient")

    @classmethod
    def _raw(cls, coeffs) -> "Jet":
        obj = cls.__new__(cls)
        obj.coeffs = tuple(coeffs)
        return obj

    @classmethod
    def constant(cls, c: Number, order: int) -> "Jet":
        return cls([c] + [0] * order)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def derivatives(self) -> list[Number]:
        """``f^(j)(1)`` for ``j = 0..order``."""
        return [c * math.factorial(j) for j, c in enumerate(self.coeffs)]

    def _coerce(self, other) -> "Jet":
        if isinstance(other, Jet):
            if other.order != self.order:
                raise ValueError(
                    f"jet order mismatch: {self.order} vs {other.order}"
                )
            return other
        if _is_scalar(other):
            return Jet.constant(other, self.order)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Jet._raw([a + b for a, b in zip(self.coeffs, other.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return Jet._raw([-c for c in self.coeffs])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Jet._raw([a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if _is_scalar(other):
            c = as_rational(other)
            return Jet._raw([as_rational(c * a) for a in self.coeffs])
        if not isinstance(other, Jet):
            return NotImplemented
        return jet_mul(self, other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if not _is_scalar(other):
            return NotImplemented
        return self * (Fraction(1) / Fraction(other))

    def __eq__(self, other):
        if isinstance(other, Jet):
            return self.coeffs == other.coeffs
        if _is_scalar(other):
            return self.coeffs == Jet.constant(other, self.order).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(("Jet", self.coeffs))

    def times_y_power(self, n: int) -> "Jet":
        return jet_mul(self, jet_y_power(n, self.order))

    def __repr__(self):
        return f"Jet({list(self.coeffs)!r})"


def jet_mul(a: Jet, b: Jet) -> Jet:
    if a.order != b.order:
        raise ValueError(f"jet order mismatch: {a.order} vs {b.order}")
    ac, bc = a.coeffs, b.coeffs
    out = []
    for j in range(len(ac)):
        out.append(as_rational(sum(ac[i] * bc[j - i] for i in range(j + 1))))
    return Jet._raw(out)


def jet_y_power(n: int, order: int) -> Jet:
    """The jet of ``y**n`` at ``y = 1``: binomial coefficients ``C(n, j)``."""
    if n < 0 or order < 0:
        raise ValueError("n and order must be nonnegative")
    return Jet._raw([math.comb(n, j) for j in range(order + 1)])
