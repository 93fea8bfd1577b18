import math
from fractions import Fraction

import pytest

from treeheight.algebra import Jet, YPolynomial
from treeheight.enumerator import compute_R
from treeheight.series import (
    IncrementalExp,
    TruncatedSeries,
    exp_of_multiple,
    generalized_lagrange_coeff,
    geometric_series,
    lagrange_coeff,
    rational_function_series,
    series_derivative,
    series_exp,
    series_mul,
    series_shift_y,
    series_times_x,
)

N = 30


def test_exp_of_x_is_inverse_factorials():
    e = series_exp(TruncatedSeries.variable(12))
    assert list(e) == [Fraction(1, math.factorial(k)) for k in range(13)]


def test_exp_rejects_constant_term():
    with pytest.raises(ValueError):
        series_exp(TruncatedSeries([1, 1]))


def test_exp_of_sum_is_product():
    a = TruncatedSeries([0, 1, Fraction(1, 2), 3, 0, -1])
    b = TruncatedSeries([0, -2, 0, Fraction(5, 7), 1, 1])
    assert series_exp(a + b) == series_mul(series_exp(a), series_exp(b))


def test_egf_mode_matches_ordinary_mode():
    a = [0, 1, 3, 2, 7, 5]
    plain = IncrementalExp(1)
    egf = IncrementalExp(1, egf=True)
    for m in range(1, len(a)):
        plain.push(Fraction(a[m], math.factorial(m)))
        egf.push(a[m])
    assert [Fraction(b, math.factorial(m)) for m, b in enumerate(egf.values)] == plain.values


def test_R_coefficients():
    R = compute_R(N)
    assert [R[n] for n in range(1, 8)] == [
        Fraction(n ** (n - 1), math.factorial(n)) for n in range(1, 8)
    ]
    assert series_times_x(series_exp(R)).truncate(N) == R


def test_R_derivative_identity():
    R = compute_R(N)
    one = TruncatedSeries([1] + [0] * (N - 1))
    lhs = series_times_x(series_mul(one - R.truncate(N - 1), series_derivative(R)))
    assert lhs == R


def test_geometric_series():
    z = TruncatedSeries.variable(6)
    assert list(geometric_series(z)) == [1] * 7
    with pytest.raises(ValueError):
        geometric_series(TruncatedSeries([1, 0]))


def test_rational_function_series():
    # 2z/(1-z)^3 = sum k(k+1) z^k
    s = rational_function_series([0, 2], 3, 10)
    assert list(s) == [k * (k + 1) for k in range(11)]


def test_lagrange_plain():
    for n in range(1, N + 1):
        assert lagrange_coeff(n) == Fraction(n ** (n - 1), math.factorial(n))


def test_generalized_lagrange_with_constant_g_prime():
    one = TruncatedSeries([1] + [0] * 9)
    assert [generalized_lagrange_coeff(one, n) for n in range(1, 11)] == [
        lagrange_coeff(n) for n in range(1, 11)
    ]


def test_generalized_lagrange_total_height():
    g_prime = rational_function_series([0, 2], 3, N)
    for n in range(2, N + 1):
        total = math.factorial(n) * sum(Fraction(n**k, math.factorial(k)) for k in range(n - 1))
        assert generalized_lagrange_coeff(g_prime, n) == total / math.factorial(n)


def test_generalized_lagrange_needs_order():
    with pytest.raises(ValueError):
        generalized_lagrange_coeff(TruncatedSeries([1, 1]), 5)


def test_square_of_R_by_lagrange():
    # G(z) = z^2: [x^n] R^2 = 2 (n-2)! n^(n-3) ... checked against the direct product
    R = compute_R(12)
    R2 = series_mul(R, R)
    g_prime = TruncatedSeries([0, 2] + [0] * 11)
    for n in range(1, 13):
        assert generalized_lagrange_coeff(g_prime, n) == R2[n]


def test_order_and_ring_mismatch():
    with pytest.raises(ValueError):
        TruncatedSeries([1, 2]) + TruncatedSeries([1, 2, 3])
    with pytest.raises(TypeError):
        TruncatedSeries([1, 2]) + TruncatedSeries([YPolynomial([1]), YPolynomial([2])])
    with pytest.raises(TypeError):
        TruncatedSeries([1, YPolynomial([1])])
    with pytest.raises(IndexError):
        TruncatedSeries([1, 2])[5]


def test_derivative_and_times_x_orders():
    a = TruncatedSeries([1, 2, 3])
    assert series_derivative(a) == TruncatedSeries([2, 6])
    assert series_times_x(a) == TruncatedSeries([0, 1, 2, 3])


def test_shift_y_over_polynomials_and_jets():
    p = TruncatedSeries([YPolynomial([1]), YPolynomial([1]), YPolynomial([0, 1])])
    assert series_shift_y(p)[2] == YPolynomial([0, 0, 0, 1])
    j = TruncatedSeries([Jet.constant(1, 2)] * 3)
    assert series_shift_y(j)[2].coeffs == (1, 2, 1)


def test_polynomial_ring_exp():
    # exp(x*y) over Q[y]: coefficient n is y^n/n!
    one = YPolynomial([1])
    zero = YPolynomial()
    e = series_exp(TruncatedSeries([zero, YPolynomial([0, 1])] + [zero] * 4))
    assert e[4] == YPolynomial.monomial(4, Fraction(1, 24))
    assert e[0] == one


def test_exp_of_multiple():
    assert list(exp_of_multiple(3, 4)) == [Fraction(3**k, math.factorial(k)) for k in range(5)]
