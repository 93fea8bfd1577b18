"""Hot kernels with a compiled implementation and a pure-Python fallback.

The compiled extension is used when it was built; setting the environment
variable ``TREEHEIGHT_PURE_PYTHON=1`` forces the fallback. Both expose

* ``jet_table(N, order, wanted)`` -- exact Taylor coefficients at ``y = 1``
  of ``J_n(y)`` for the requested sizes;
* ``total_heights(seqs, roots, n)`` -- total heights of rooted trees encoded as
  0-based Prüfer rows plus a root.
"""

from __future__ import annotations

import os

import numpy as np

from . import pure

if os.environ.get("TREEHEIGHT_PURE_PYTHON", "") not in ("", "0"):
    _impl = pure
else:
    try:
        from . import fast as _impl
    except ImportError:
        _impl = pure

BACKEND: str = _impl.BACKEND


def jet_table(N: int, order: int, wanted) -> dict[int, tuple[int, ...]]:
    return _impl.jet_table(N, order, wanted)


def total_heights(seqs, roots, n: int) -> np.ndarray:
    seqs = np.asarray(seqs, dtype=np.int64).reshape(len(roots), max(n - 2, 0))
    roots = np.asarray(roots, dtype=np.int64)
    if n < 1:
        raise ValueError("n must be >= 1")
    if len(roots) and (roots.min() < 0 or roots.max() >= n):
        raise ValueError("roots must be 0-based labels below n")
    if seqs.size and (seqs.min() < 0 or seqs.max() >= n):
        raise ValueError("Prüfer entries must be 0-based labels below n")
    return _impl.total_heights(seqs, roots, n)
