"""Compare the compiled kernels with the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--sizes 100 200 400] [--order 4]
"""

import argparse
import time

import numpy as np

from treeheight._kernels import pure

try:
    from treeheight._kernels import fast
except ImportError:
    fast = None


def timed(fn, *args, repeat=3):
    best = float("inf")
    for _ in range(repeat):
        t = time.perf_counter()
        out = fn(*args)
        best = min(best, time.perf_counter() - t)
    return best, out


def main():
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--sizes", type=int, nargs="+", default=[100, 200, 400])
    ap.add_argument("--order", type=int, default=4)
    ap.add_argument("--trees", type=int, default=5_000)
    args = ap.parse_args()
    if fast is None:
        raise SystemExit("compiled extension not built; nothing to compare")

    print(f"{'kernel':<14}{'size':>6}{'python s':>12}{'compiled s':>12}{'speedup':>10}")
    for N in args.sizes:
        tp, a = timed(pure.jet_table, N, args.order, [N], repeat=1)
        tc, b = timed(fast.jet_table, N, args.order, [N])
        assert a == b
        print(f"{'jet_table':<14}{N:>6}{tp:>12.3f}{tc:>12.3f}{tp / tc:>10.1f}")

    rng = np.random.default_rng(0)
    for n in (10, 100, 1000):
        seqs = rng.integers(0, n, size=(args.trees, n - 2))
        roots = rng.integers(0, n, size=args.trees)
        tp, a = timed(pure.total_heights, seqs, roots, n, repeat=1)
        tc, b = timed(fast.total_heights, seqs, roots, n)
        assert np.array_equal(a, b)
        print(f"{'total_heights':<14}{n:>6}{tp:>12.3f}{tc:>12.3f}{tp / tc:>10.1f}")


if __name__ == "__main__":
    main()
