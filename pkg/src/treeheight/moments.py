"""Exact and limiting statistics of the total height.

Everything up to :func:`standardized_moments` is exact rational arithmetic;
floats appear only in standardized moments and in :func:`limit_constants`.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Mapping, Optional, Sequence

from .algebra import Number, as_rational

# OEIS A000435: J_n'(1)/n for n = 2, 3, 4, 5
A000435_PREFIX = (1, 8, 78, 944)


class Source(str, enum.Enum):
    CLOSED_FORM = "closed_form"
    ENUMERATOR = "enumerator"
    ORACLE = "oracle"


def total_height_sum(n: int) -> int:
    """``J_n'(1) = n! * sum_(k=0..n-2) n^k / k!``, the total over all trees."""
    if n < 1:
        raise ValueError("n must be >= 1")
    total = 0
    falling = 1  # n!/k!, built downward from k = n
    for k in range(n, -1, -1):
        if k <= n - 2:
            total += n**k * falling
        falling *= max(k, 1)
    return total


def W(n: int) -> Number:
    """Mean total height over the ``n^(n-1)`` rooted labeled trees."""
    return as_rational(Fraction(total_height_sum(n), n ** (n - 1)))


def mean_total_height(n: int) -> Number:
    return W(n)


def variance_closed(n: int) -> Number:
    w = Fraction(W(n))
    return as_rational(-(w**2) - Fraction(17, 6) * n * w + Fraction(5, 3) * n**2 * (n - 1))


def third_central_closed(n: int) -> Number:
    w = Fraction(W(n))
    F = Fraction
    return as_rational(
        2 * w**3
        + F(17, 2) * n * w**2
        + (-F(25, 8) * n**3 + F(277, 24) * n**2 - F(1, 60) * n) * w
        - F(151, 30) * n**4
        + F(76, 15) * n**3
        - F(1, 30) * n**2
    )


def fourth_central_closed(n: int) -> Number:
    w = Fraction(W(n))
    F = Fraction
    return as_rational(
        -3 * w**4
        - 17 * n * w**3
        + (F(5, 2) * n**3 - F(217, 6) * n**2 + F(1, 15) * n) * w**2
        + (F(649, 80) * n**4 - F(74381, 2160) * n**3 + F(433, 2520) * n**2 + F(1, 105) * n) * w
        + F(221, 63) * n**6
        + F(4693, 540) * n**5
        - F(4651, 378) * n**4
        + F(109, 1260) * n**3
        + F(2, 105) * n**2
    )


@lru_cache(maxsize=None)
def stirling2_row(j: int) -> tuple[int, ...]:
    """``S(j, k)`` for ``k = 0..j``, by the triangular recurrence."""
    if j == 0:
        return (1,)
    prev = stirling2_row(j - 1) + (0,)
    return tuple((k * prev[k] if k else 0) + (prev[k - 1] if k else 0) for k in range(j + 1))


@dataclass(frozen=True)
class MomentReport:
    n: int
    mean: Number
    central: Mapping[int, Number]  # order -> central moment, orders 2..r
    source: Source
    standardized: Optional[Mapping[int, float]] = field(default=None, compare=False)

    @property
    def max_order(self) -> int:
        return max(self.central, default=1)

    @property
    def variance(self) -> Number:
        return self.central[2]


def factorial_to_central(
    factorial_moments: Sequence[Number],
    count: Number,
    r: int,
    n: int = 0,
    source: Source = Source.ENUMERATOR,
) -> MomentReport:
    """Central moments from summed factorial moments ``f_k = sum_T X(X-1)..(X-k+1)``.

    Raw moments are ``E[X^j] = sum_k S(j, k) f_k / count``; central moments
    follow by binomial expansion about the mean.
    """
    if r + 1 > len(factorial_moments):
        raise ValueError(
            f"order {r} needs {r + 1} factorial moments, got {len(factorial_moments)}"
        )
    if count <= 0 or factorial_moments[0] != count:
        raise ValueError("factorial_moments[0] must equal the (positive) count")
    count = Fraction(count)
    raw = [
        sum(s * Fraction(factorial_moments[k]) for k, s in enumerate(stirling2_row(j))) / count
        for j in range(r + 1)
    ]
    mean = raw[1] if r >= 1 else Fraction(0)
    central = {}
    for k in range(2, r + 1):
        central[k] = as_rational(
            sum(math.comb(k, i) * raw[i] * (-mean) ** (k - i) for i in range(k + 1))
        )
    report = MomentReport(n, as_rational(mean), central, Source(source))
    return _with_standardized(report)


def central_from_distribution(counts: Mapping[int, int], r: int, n: int = 0) -> MomentReport:
    """Central moments straight from a ``{value: count}`` table."""
    total = sum(counts.values())
    mean = Fraction(sum(h * c for h, c in counts.items()), total)
    central = {
        k: as_rational(sum(c * (h - mean) ** k for h, c in counts.items()) / total)
        for k in range(2, r + 1)
    }
    return _with_standardized(MomentReport(n, as_rational(mean), central, Source.ORACLE))


def closed_form_report(n: int) -> MomentReport:
    central = {
        2: variance_closed(n),
        3: third_central_closed(n),
        4: fourth_central_closed(n),
    }
    return _with_standardized(MomentReport(n, W(n), central, Source.CLOSED_FORM))


def _with_standardized(report: MomentReport) -> MomentReport:
    if report.max_order < 3 or not report.central.get(2):
        return report
    alphas = standardized_moments(report, report.max_order)
    return MomentReport(report.n, report.mean, report.central, report.source, alphas)


def _ratio_power(num: Fraction, var: Fraction, k: int) -> float:
    # num / var^(k/2), keeping the exact part exact
    half, odd = divmod(k, 2)
    q = Fraction(num) / Fraction(var) ** half
    value = float(q)
    if odd:
        value /= math.sqrt(Fraction(var))
    return value


def standardized_moments(report: MomentReport, up_to: int) -> dict[int, float]:
    """``alpha_k = mu_k / mu_2^(k/2)`` for ``k = 3..up_to``."""
    var = report.central.get(2)
    if not var:
        raise ValueError("standardized moments are undefined for zero variance")
    if up_to > report.max_order:
        raise ValueError(f"report only reaches order {report.max_order}")
    return {k: _ratio_power(report.central[k], var, k) for k in range(3, up_to + 1)}


# -- limits -----------------------------------------------------------------------

# Printed decimals for the limiting constants. Orders 10-12 are only known
# through these decimals and are never recomputed.
REFERENCE_DECIMALS = {
    "cv": "0.2470484847",
    "alpha3": "0.7005665208",
    "alpha4": "3.560394751",
    "alpha5": "7.256376376",
    "alpha6": "27.68549546",
    "alpha7": "90.01702180",
    "alpha8": "358.8086679",
    "alpha9": "1460.710269",
    "alpha10": "6498.233818",
    "alpha11": "30389.98955",
    "alpha12": "150516.4157",
    "mu3_coeff": "0.020795808",
    "mu4_coeff": "0.032724023",
}
REFERENCE_ONLY = ("alpha10", "alpha11", "alpha12")


@dataclass(frozen=True)
class LimitConstants:
    cv_limit: float
    alpha: Mapping[int, float]
    mean_coeff: float
    var_coeff: float
    mu3_coeff: float
    mu4_coeff: float
    recomputed: frozenset = frozenset()

    def as_dict(self) -> dict[str, float]:
        out = {"cv": self.cv_limit}
        out.update({f"alpha{k}": v for k, v in sorted(self.alpha.items())})
        out.update(
            mean_coeff=self.mean_coeff,
            var_coeff=self.var_coeff,
            mu3_coeff=self.mu3_coeff,
            mu4_coeff=self.mu4_coeff,
        )
        return out


def _recomputed_alphas() -> dict[int, float]:
    pi = math.pi
    d = 10 - 3 * pi
    s = math.sqrt(3) * math.sqrt(pi / d)
    return {
        3: (6 * pi - 75 / 4) * s / d,
        4: (-189 * pi**2 + 315 * pi + 884) / (7 * d**2),
        5: (36 * pi**2 + 75 / 2 * pi - 105845 / 224) * s / d**2,
        6: 15 / 16016 * (-144144 * pi**3 - 720720 * pi**2 + 3013725 * pi + 2120320) / d**3,
        7: (162 * pi**3 + 6615 / 4 * pi**2 - 103965 / 32 * pi - 101897475 / 9152) * s / d**3,
        8: 3
        / 2586584
        * (
            -488864376 * pi**4
            - 8147739600 * pi**3
            - 455885430 * pi**2
            + 86568885375 * pi
            + 32820007040
        )
        / d**4,
        9: (
            648 * pi**4
            + 15795 * pi**3
            + 591867 / 16 * pi**2
            - 461286225 / 2288 * pi
            - 188411947088175 / 662165504
        )
        * s
        / d**4,
    }


def limit_constants() -> LimitConstants:
    """Limits as ``n -> oo``: coefficient of variation, ``alpha_3..alpha_12``
    and the leading coefficients of the mean and of ``mu_2, mu_3, mu_4``."""
    pi = math.pi
    alpha = _recomputed_alphas()
    for name in REFERENCE_ONLY:
        alpha[int(name[5:])] = float(REFERENCE_DECIMALS[name])
    return LimitConstants(
        cv_limit=math.sqrt(2) / 6 * math.sqrt(60 - 18 * pi) / math.sqrt(pi),
        alpha=alpha,
        mean_coeff=math.sqrt(pi / 2),
        var_coeff=5 / 3 - pi / 2,
        mu3_coeff=math.sqrt(2) * pi**1.5 / 2 - 25 * math.sqrt(2) * math.sqrt(pi) / 16,
        mu4_coeff=-3 * pi**2 / 4 + 5 * pi / 4 + 221 / 63,
        recomputed=frozenset({"cv", "mean_coeff", "var_coeff", "mu3_coeff", "mu4_coeff"}
                             | {f"alpha{k}" for k in range(3, 10)}),
    )


def significant_match(value: float, printed: str, digits: int = 9) -> bool:
    """True when ``value`` agrees with a printed decimal to ``digits`` significant digits."""
    ref = float(printed)
    unit = 10.0 ** (math.floor(math.log10(abs(ref))) - digits + 1)
    return abs(value - ref) <= unit / 2
