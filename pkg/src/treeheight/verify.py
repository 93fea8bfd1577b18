"""Named cross-source identity checks.

Check names are stable; ``run_checks`` returns them in the order of
:data:`CHECKS`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from . import moments, oracle, series
from .algebra import Jet
from .enumerator import (
    compute_factorial_moments,
    compute_J_polynomials,
    compute_R,
    factorial_moment_sweep,
    solve_fe,
)
from .series import TruncatedSeries


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


class CheckFailed(Exception):
    pass


def _expect(cond: bool, detail: str) -> None:
    if not cond:
        raise CheckFailed(detail)


def _equal(got, want, what: str) -> None:
    if got != want:
        raise CheckFailed(f"{what}: got {got}, want {want}")


@dataclass
class VerifyConfig:
    series_order: int = 30
    lagrange_max: int = 30
    closed_vs_enumerator_max: int = 50
    oracle_max: int = 7


def check_cayley_counts(cfg: VerifyConfig) -> str:
    for n in range(1, cfg.oracle_max + 1):
        count = sum(1 for _ in oracle.enumerate_rooted_trees(n))
        _equal(count, n ** (n - 1), f"rooted trees on {n} vertices")
    return f"n=1..{cfg.oracle_max}"


def check_a000435(cfg: VerifyConfig) -> str:
    jets = [compute_factorial_moments(n, 1).factorial_moments[1] // n for n in range(2, 6)]
    closed = [moments.total_height_sum(n) // n for n in range(2, 6)]
    _equal(tuple(jets), tuple(moments.A000435_PREFIX), "jet pipeline")
    _equal(tuple(closed), tuple(moments.A000435_PREFIX), "closed form")
    return ",".join(map(str, moments.A000435_PREFIX))


def check_R_fixed_point(cfg: VerifyConfig) -> str:
    N = cfg.series_order
    R = compute_R(N)
    rhs = series.series_times_x(series.series_exp(R)).truncate(N)
    _equal(rhs, R, "x*exp(R)")
    for n in range(1, N + 1):
        _equal(R[n], Fraction(n ** (n - 1), math.factorial(n)), f"[x^{n}]R")
    return f"order {N}"


def check_R_derivative(cfg: VerifyConfig) -> str:
    N = cfg.series_order
    R = compute_R(N)
    one_minus_R = (TruncatedSeries([1] + [0] * N) - R).truncate(N - 1)
    # R' is exact through x^(N-1), so x(1-R)R' is exact through x^N
    lhs = series.series_times_x(series.series_mul(one_minus_R, series.series_derivative(R)))
    _equal(lhs, R, "x(1-R)R'")
    return f"order {N}"


def check_Jy_identity(cfg: VerifyConfig) -> str:
    N = cfg.series_order
    jets = solve_fe(Jet.constant(1, 1), N)
    # [x^n] J_y(x, 1) = J_n'(1)/n!
    Jy = TruncatedSeries([0] + [Fraction(j.coeffs[1], math.factorial(n)) for n, j in enumerate(jets, 1)])
    R = compute_R(N)
    geo = series.geometric_series(R)
    R2 = series.series_mul(R, R)
    rhs = series.series_mul(R2, series.series_mul(geo, geo))
    _equal(Jy, rhs, "J_y(x,1) vs R^2/(1-R)^2")
    return f"order {N}"


def check_lagrange_plain(cfg: VerifyConfig) -> str:
    one = TruncatedSeries([1] + [0] * (cfg.lagrange_max - 1))
    for n in range(1, cfg.lagrange_max + 1):
        a = series.lagrange_coeff(n)
        _equal(a, Fraction(n ** (n - 1), math.factorial(n)), f"n={n}")
        _equal(series.generalized_lagrange_coeff(one, n), a, f"G'=1, n={n}")
    return f"n=1..{cfg.lagrange_max}"


def check_lagrange_Jprime(cfg: VerifyConfig) -> str:
    N = cfg.lagrange_max
    g_prime = series.rational_function_series([0, 2], 3, N)
    for n in range(2, N + 1):
        want = Fraction(moments.total_height_sum(n), math.factorial(n))
        _equal(series.generalized_lagrange_coeff(g_prime, n), want, f"n={n}")
    return f"n=2..{N}"


def check_polynomial_shape(cfg: VerifyConfig) -> str:
    polys = compute_J_polynomials(12)
    for n, p in enumerate(polys, 1):
        _equal(p(1), n ** (n - 1), f"J_{n}(1)")
        _equal(p.degree, n * (n - 1) // 2, f"deg J_{n}")
        _equal(p.coefficient(p.degree), math.factorial(n), f"lead J_{n}")
        if n >= 2:
            _equal(p.valuation, n - 1, f"val J_{n}")
            _equal(p.coefficient(n - 1), n, f"low J_{n}")
    return "n=1..12"


def check_jet_vs_polynomial(cfg: VerifyConfig) -> str:
    for n in range(1, 13):
        a = compute_factorial_moments(n, 6, method="polynomial").factorial_moments
        b = compute_factorial_moments(n, 6).factorial_moments
        _equal(b, a, f"n={n}")
    return "n<=12, r<=6"


def check_mean_closed_form(cfg: VerifyConfig) -> str:
    table = factorial_moment_sweep(list(range(1, 41)), 1)
    for n, res in table.items():
        _equal(res.factorial_moments[1], moments.total_height_sum(n), f"J_{n}'(1)")
    return "n<=40"


def check_oracle_equivalence(cfg: VerifyConfig) -> str:
    polys = compute_J_polynomials(cfg.oracle_max)
    for n, p in enumerate(polys, 1):
        _equal(dict(oracle.exact_distribution(n).counts), p.as_map(), f"n={n}")
    return f"n=1..{cfg.oracle_max}"


def check_oracle_mean(cfg: VerifyConfig) -> str:
    for n in range(1, cfg.oracle_max + 1):
        d = oracle.exact_distribution(n)
        _equal(Fraction(d.moment_sums(1), d.total), moments.W(n), f"n={n}")
    return f"n=1..{cfg.oracle_max}"


def check_three_way(cfg: VerifyConfig) -> str:
    for n in range(1, cfg.oracle_max + 1):
        c = moments.closed_form_report(n).central
        f = compute_factorial_moments(n, 4).factorial_moments
        e = moments.factorial_to_central(f, n ** (n - 1), 4, n).central
        o = moments.central_from_distribution(oracle.exact_distribution(n).counts, 4, n).central
        _equal(e, c, f"enumerator vs closed, n={n}")
        _equal(o, c, f"oracle vs closed, n={n}")
    _equal(moments.variance_closed(1), 0, "variance(1)")
    _equal(moments.variance_closed(2), 0, "variance(2)")
    return f"n=1..{cfg.oracle_max}"


def check_closed_vs_enumerator(cfg: VerifyConfig) -> str:
    hi = cfg.closed_vs_enumerator_max
    lo = cfg.oracle_max + 1
    table = factorial_moment_sweep(list(range(lo, hi + 1)), 4)
    for n, res in table.items():
        e = moments.factorial_to_central(res.factorial_moments, n ** (n - 1), 4, n).central
        _equal(e, moments.closed_form_report(n).central, f"n={n}")
    return f"n={lo}..{hi}"


def check_limit_consistency(cfg: VerifyConfig) -> str:
    lc = moments.limit_constants()
    pairs = {
        "alpha3": (lc.alpha[3], lc.mu3_coeff / lc.var_coeff**1.5),
        "alpha4": (lc.alpha[4], lc.mu4_coeff / lc.var_coeff**2),
        "cv": (lc.cv_limit, math.sqrt(lc.var_coeff) / lc.mean_coeff),
    }
    for name, (a, b) in pairs.items():
        _expect(math.isclose(a, b, rel_tol=1e-12), f"{name}: {a!r} vs {b!r}")
    return "alpha3, alpha4, cv from leading coefficients"


def check_reference_roundtrip(cfg: VerifyConfig) -> str:
    lc = moments.limit_constants()
    for name in moments.REFERENCE_ONLY:
        printed = moments.REFERENCE_DECIMALS[name]
        _equal(repr(lc.alpha[int(name[5:])]), printed, name)
    return ",".join(moments.REFERENCE_ONLY)


CHECKS: dict[str, Callable[[VerifyConfig], str]] = {
    "cayley_counts": check_cayley_counts,
    "A000435 prefix 1,8,78,944": check_a000435,
    "series_R_fixed_point": check_R_fixed_point,
    "series_R_derivative": check_R_derivative,
    "series_Jy_identity": check_Jy_identity,
    "lagrange_plain": check_lagrange_plain,
    "lagrange_generalized_Jprime": check_lagrange_Jprime,
    "enumerator_polynomial_shape": check_polynomial_shape,
    "enumerator_jet_vs_polynomial": check_jet_vs_polynomial,
    "enumerator_mean_closed_form": check_mean_closed_form,
    "oracle_equivalence": check_oracle_equivalence,
    "oracle_mean": check_oracle_mean,
    "moments_three_way": check_three_way,
    "moments_closed_vs_enumerator": check_closed_vs_enumerator,
    "limits_internal_consistency": check_limit_consistency,
    "limits_reference_roundtrip": check_reference_roundtrip,
}


def run_checks(cfg: VerifyConfig | None = None, only=None) -> list[CheckResult]:
    cfg = cfg or VerifyConfig()
    results = []
    for name, fn in CHECKS.items():
        if only is not None and name not in only:
            continue
        try:
            detail = fn(cfg)
            results.append(CheckResult(name, True, detail))
        except CheckFailed as exc:
            results.append(CheckResult(name, False, str(exc)))
    return results
