import math
from fractions import Fraction

import pytest

from treeheight import moments
from treeheight.enumerator import compute_factorial_moments, factorial_moment_sweep
from treeheight.moments import (
    MomentReport,
    Source,
    W,
    central_from_distribution,
    closed_form_report,
    factorial_to_central,
    fourth_central_closed,
    limit_constants,
    significant_match,
    standardized_moments,
    stirling2_row,
    third_central_closed,
    total_height_sum,
    variance_closed,
)
from treeheight.oracle import exact_distribution


def test_n3_values():
    assert W(3) == Fraction(8, 3)
    assert variance_closed(3) == Fraction(2, 9)
    assert third_central_closed(3) == Fraction(-2, 27)
    assert fourth_central_closed(3) == Fraction(2, 27)


def test_degenerate_sizes():
    for n in (1, 2):
        assert variance_closed(n) == 0
        assert third_central_closed(n) == 0
        assert fourth_central_closed(n) == 0
    r = closed_form_report(2)
    assert r.standardized is None
    with pytest.raises(ValueError):
        standardized_moments(r, 3)


def test_a000435():
    assert [total_height_sum(n) // n for n in range(2, 6)] == list(moments.A000435_PREFIX)


def test_stirling_rows():
    assert stirling2_row(4) == (0, 1, 7, 6, 1)
    assert stirling2_row(0) == (1,)


def test_factorial_to_central_on_a_small_table():
    # X takes 0, 1, 3 once each
    values = [0, 1, 3]
    f = [sum(math.perm(x, k) for x in values) for k in range(5)]
    rep = factorial_to_central(f, 3, 4)
    direct = central_from_distribution({0: 1, 1: 1, 3: 1}, 4)
    assert rep.mean == direct.mean == Fraction(4, 3)
    assert dict(rep.central) == dict(direct.central)


@pytest.mark.parametrize("n", range(1, 8))
def test_three_way(n):
    c = closed_form_report(n)
    e = factorial_to_central(compute_factorial_moments(n, 4).factorial_moments, n ** (n - 1), 4, n)
    o = central_from_distribution(exact_distribution(n).counts, 4, n)
    assert c.mean == e.mean == o.mean
    assert dict(c.central) == dict(e.central) == dict(o.central)


def test_closed_forms_against_enumerator_to_50():
    table = factorial_moment_sweep(list(range(8, 51)), 4)
    for n, res in table.items():
        e = factorial_to_central(res.factorial_moments, n ** (n - 1), 4, n)
        c = closed_form_report(n)
        assert (e.mean, dict(e.central)) == (c.mean, dict(c.central))


def test_standardized_moments_exact_then_float():
    rep = closed_form_report(3)
    alpha = standardized_moments(rep, 4)
    assert alpha[4] == pytest.approx(float(Fraction(2, 27) / Fraction(2, 9) ** 2), rel=1e-15)
    assert alpha[3] == pytest.approx(-(2 / 27) / (2 / 9) ** 1.5, rel=1e-14)


def test_report_validation():
    with pytest.raises(ValueError):
        factorial_to_central([1, 2], 1, 4)
    with pytest.raises(ValueError):
        factorial_to_central([2, 2, 2], 1, 2)
    assert MomentReport(1, 0, {}, Source.ORACLE).max_order == 1


def test_limit_constants_internal():
    lc = limit_constants()
    assert lc.mean_coeff == pytest.approx(math.sqrt(math.pi / 2))
    assert lc.var_coeff == pytest.approx(5 / 3 - math.pi / 2)
    assert lc.alpha[3] == pytest.approx(lc.mu3_coeff / lc.var_coeff**1.5, rel=1e-12)
    assert lc.alpha[4] == pytest.approx(lc.mu4_coeff / lc.var_coeff**2, rel=1e-12)
    assert lc.cv_limit == pytest.approx(math.sqrt(lc.var_coeff) / lc.mean_coeff, rel=1e-12)
    assert set(lc.as_dict()) >= {"cv", "alpha3", "alpha12", "mu4_coeff"}


def test_reference_only_orders_round_trip():
    lc = limit_constants()
    for name in moments.REFERENCE_ONLY:
        assert repr(lc.alpha[int(name[5:])]) == moments.REFERENCE_DECIMALS[name]


def test_variance_grows_like_n_cubed():
    # leading coefficient approached from below
    lc = limit_constants()
    ratios = [float(variance_closed(n)) / n**3 for n in (10, 100, 1000)]
    assert ratios == sorted(ratios)
    assert ratios[-1] < lc.var_coeff


def test_significant_match():
    assert significant_match(0.70056652081, "0.7005665208")
    assert not significant_match(0.7005665293, "0.7005665208")
    assert significant_match(1460.7102686, "1460.710269")
