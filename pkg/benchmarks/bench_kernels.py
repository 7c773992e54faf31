"""Compare the numba and pure-numpy backends of the two hot kernels.

    python3 benchmarks/bench_kernels.py [--repeat N]

The numba backend is warmed up once before timing so compilation is excluded.
"""
import argparse
import time

import numpy as np

from condcolor import graph as G
from condcolor import kernels
from condcolor._accel import HAVE_NUMBA
from condcolor.solver import chi_r_exact

SEARCH_CASES = [
    ("cycle_square(12), r=4", G.cycle_square(12), 4),
    ("cycle_square(19), r=4", G.cycle_square(19), 4),
    ("web(3,7), r=2", G.web(3, 7), 2),
    ("strong_grid(3,4), r=5", G.strong_grid(3, 4), 5),
    ("grid2n(12), r=3", G.grid2n(12), 3),
]


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def bench_search(repeat):
    print(f"{'chi_r_exact':28} {'chi':>4} {'nodes':>9} {'numpy s':>10} {'numba s':>10} {'speedup':>8}")
    for name, g, r in SEARCH_CASES:
        chi_r_exact(g, r, backend="numba")
        res = chi_r_exact(g, r, backend="numpy")
        t_np = best_of(lambda: chi_r_exact(g, r, backend="numpy"), repeat)
        t_nb = best_of(lambda: chi_r_exact(g, r, backend="numba"), repeat)
        print(f"{name:28} {res.chi:>4} {res.nodes_explored:>9} {t_np:>10.4f} {t_nb:>10.4f} {t_np / t_nb:>7.1f}x")


def bench_neighbor_distinct(repeat):
    rng = np.random.default_rng(0)
    print(f"\n{'neighbor_distinct':28} {'|V|':>6} {'numpy s':>10} {'numba s':>10} {'speedup':>8}")
    for n in (1_000, 100_000):
        g = G.cycle_square(n)
        indptr, indices = g.csr
        colors = rng.integers(1, 6, size=n).astype(np.int64)
        kernels.neighbor_distinct(indptr, indices, colors, 5, backend="numba")
        t_np = best_of(lambda: kernels.neighbor_distinct(indptr, indices, colors, 5, backend="numpy"), repeat)
        t_nb = best_of(lambda: kernels.neighbor_distinct(indptr, indices, colors, 5, backend="numba"), repeat)
        print(f"{'cycle_square(' + str(n) + ')':28} {n:>6} {t_np:>10.5f} {t_nb:>10.5f} {t_np / t_nb:>7.1f}x")


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if not HAVE_NUMBA:
        print("numba is not importable; both columns run the numpy backend")
    bench_search(args.repeat)
    bench_neighbor_distinct(args.repeat)


if __name__ == "__main__":
    main()
