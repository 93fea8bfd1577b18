from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from treeheight.montecarlo import (
    PowerSums,
    draw_total_heights,
    sample_statistics,
    scaled_histogram,
)


def test_deterministic_given_seed():
    a = draw_total_heights(30, 5000, seed=7)
    b = draw_total_heights(30, 5000, seed=7)
    assert np.array_equal(a, b)
    assert not np.array_equal(a, draw_total_heights(30, 5000, seed=8))


def test_multi_worker_deterministic():
    a = draw_total_heights(20, 3001, seed=1, workers=2)
    b = draw_total_heights(20, 3001, seed=1, workers=2)
    assert len(a) == 3001 and np.array_equal(a, b)


def test_mean_at_n4():
    h = draw_total_heights(4, 200_000, seed=3)
    s = sample_statistics(h, 4)
    # exact mean 39/8
    assert abs(s["mean"] - 4.875) < 4 * s["mean_se"]


@given(st.lists(st.integers(0, 10**6), min_size=2, max_size=50),
       st.lists(st.integers(0, 10**6), min_size=2, max_size=50))
def test_power_sums_merge(a, b):
    assert PowerSums.of(a) + PowerSums.of(b) == PowerSums.of(a + b)
    assert PowerSums.of(a + b) == PowerSums.of(b + a)


def test_power_sum_central_moments_exact():
    m, c2, c3, c4 = PowerSums.of([0, 1, 3]).central()
    assert m == Fraction(4, 3)
    assert c2 == Fraction(14, 9)


def test_statistics_degenerate():
    s = sample_statistics([5, 5, 5, 5, 5], 3)
    assert s["variance"] == 0 and s["skewness"] is None


def test_histogram_mass_and_determinism():
    h = draw_total_heights(100, 4000, seed=0)
    a = scaled_histogram(h, 100, 37)
    b = scaled_histogram(h, 100, 37)
    assert len(a.counts) == 37 and a.counts.sum() == 4000
    assert abs(a.mass - 1) < 1e-9
    assert np.array_equal(a.density, b.density)
    assert a.edges[0] <= a.mode <= a.edges[-1]


def test_histogram_single_value():
    h = scaled_histogram([4, 4, 4], 3, 4)
    assert abs(h.mass - 1) < 1e-9


def test_argument_checks():
    with pytest.raises(ValueError):
        draw_total_heights(5, 0)
    with pytest.raises(ValueError):
        draw_total_heights(5, 10, workers=0)
    with pytest.raises(ValueError):
        scaled_histogram([1, 2], 3, 0)
