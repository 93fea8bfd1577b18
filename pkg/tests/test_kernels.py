import os
import subprocess
import sys

import numpy as np
import pytest

from treeheight import _kernels
from treeheight._kernels import pure

try:
    from treeheight._kernels import fast
except ImportError:  # extension not built
    fast = None

needs_fast = pytest.mark.skipif(fast is None, reason="compiled extension not built")


def test_backend_name():
    assert _kernels.BACKEND in ("compiled", "python")


@needs_fast
@pytest.mark.parametrize("N,order", [(1, 0), (5, 3), (30, 4), (120, 4), (60, 9)])
def test_jet_tables_agree(N, order):
    wanted = sorted({1, N // 2 or 1, N})
    assert fast.jet_table(N, order, wanted) == pure.jet_table(N, order, wanted)


@needs_fast
def test_total_heights_agree():
    rng = np.random.default_rng(11)
    for n in (1, 2, 3, 9, 50):
        seqs = rng.integers(0, n, size=(300, max(n - 2, 0)))
        roots = rng.integers(0, n, size=300)
        assert np.array_equal(fast.total_heights(seqs, roots, n), pure.total_heights(seqs, roots, n))


@needs_fast
def test_value_bound_covers_values():
    t = fast.jet_table(40, 3, [40])[40]
    assert all(c <= fast.value_bound(40, j) for j, c in enumerate(t))


def test_input_validation():
    with pytest.raises(ValueError):
        _kernels.total_heights([[0]], [3], 3)
    with pytest.raises(ValueError):
        _kernels.total_heights([[5]], [0], 3)


def test_pure_fallback_selected_by_environment():
    env = dict(os.environ, TREEHEIGHT_PURE_PYTHON="1")
    out = subprocess.run(
        [sys.executable, "-c", "import treeheight; print(treeheight.BACKEND)"],
        env=env, capture_output=True, text=True, check=True,
    )
    assert out.stdout.strip() == "python"


def test_pure_backend_end_to_end(monkeypatch):
    from treeheight import moments
    from treeheight.enumerator import compute_factorial_moments

    monkeypatch.setattr(_kernels, "_impl", pure)
    f = compute_factorial_moments(25, 4).factorial_moments
    rep = moments.factorial_to_central(f, 25**24, 4, 25)
    assert dict(rep.central) == dict(moments.closed_form_report(25).central)
