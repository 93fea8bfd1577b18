import itertools
from collections import Counter

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from scipy.stats import chisquare

from treeheight import oracle
from treeheight.oracle import (
    HeightDistribution,
    RootedTree,
    enumerate_rooted_trees,
    exact_distribution,
    prufer_decode,
    prufer_encode,
    root_tree,
    sample_total_heights,
    sample_tree,
    total_height,
)


@pytest.mark.parametrize("n", range(1, 8))
def test_cayley_counts(n):
    trees = [t.key() for t in enumerate_rooted_trees(n)]
    assert len(trees) == n ** (n - 1)
    assert len(set(trees)) == len(trees)


def test_distribution_matches_brute_force(brute_heights):
    for n, heights in brute_heights.items():
        assert exact_distribution(n).counts == dict(sorted(Counter(heights).items()))


def test_distribution_matches_tree_walk():
    for n in range(1, 7):
        walked = Counter(total_height(t) for t in enumerate_rooted_trees(n))
        assert exact_distribution(n).counts == dict(sorted(walked.items()))


def test_n3_distribution():
    d = exact_distribution(3)
    assert d.counts == {2: 3, 3: 6}
    assert d.total == 9 and d.moment_sums(1) == 24


def test_n8_total():
    d = exact_distribution(8)
    assert d.total == 8**7


def test_size_guard():
    with pytest.raises(ValueError, match="allow_large"):
        exact_distribution(9)
    with pytest.raises(ValueError):
        list(enumerate_rooted_trees(10, allow_large=True))


@given(st.integers(2, 9).flatmap(lambda n: st.tuples(st.just(n), st.lists(
    st.integers(1, n), min_size=n - 2, max_size=n - 2))))
def test_prufer_roundtrip(case):
    n, seq = case
    edges = prufer_decode(seq, n)
    assert len(edges) == n - 1
    assert prufer_encode(edges, n) == seq


def test_prufer_bijection_n5():
    codes = {tuple(prufer_encode(prufer_decode(s, 5), 5))
             for s in itertools.product(range(1, 6), repeat=3)}
    assert len(codes) == 125


def test_prufer_validation():
    with pytest.raises(ValueError):
        prufer_decode([1, 2], 5)
    with pytest.raises(ValueError):
        prufer_decode([0, 1, 1], 5)
    with pytest.raises(ValueError):
        prufer_decode([], 1)


def test_rooted_tree_validation():
    with pytest.raises(ValueError):
        RootedTree(3, 1, {2: 3, 3: 2})
    with pytest.raises(ValueError):
        RootedTree(3, 4, {})
    t = root_tree([(1, 2), (2, 3)], 3, 1)
    assert t.depths() == {1: 0, 2: 1, 3: 2}
    assert total_height(t) == 3


def test_kernel_decoder_agrees_with_public_decoder():
    rng = np.random.default_rng(5)
    n = 12
    seqs = rng.integers(0, n, size=(200, n - 2))
    roots = rng.integers(0, n, size=200)
    got = oracle._kernels.total_heights(seqs, roots, n)
    want = [total_height(root_tree(prufer_decode((s + 1).tolist(), n), n, int(r) + 1))
            for s, r in zip(seqs, roots)]
    assert got.tolist() == want


def test_sampler_uniform_at_n3():
    rng = np.random.default_rng(2024)
    keys = sorted(t.key() for t in enumerate_rooted_trees(3))
    index = {k: i for i, k in enumerate(keys)}
    observed = np.zeros(len(keys))
    for _ in range(90_000):
        observed[index[sample_tree(3, rng).key()]] += 1
    assert chisquare(observed).pvalue > 1e-3


def test_sample_total_heights_blocks_do_not_matter_for_value_range():
    rng = np.random.default_rng(0)
    h = sample_total_heights(6, 5000, rng, block=777)
    support = set(exact_distribution(6).counts)
    assert set(h.tolist()) <= support


def test_exhaustive_n1():
    assert exact_distribution(1) == HeightDistribution(1, {0: 1})
    assert sample_tree(1, np.random.default_rng(0)).n == 1
