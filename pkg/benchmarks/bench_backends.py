"""Compare the compiled and pure-Python kernel backends.

Times the cyclic Jacobi eigensolver over batches of random Hermitian
matrices and the golden-section minimizer over an x grid, best of three
repeats each, and prints per-size speedups. Also cross-checks that both
backends return identical results on the benchmarked inputs, so a run
doubles as a quick parity check.

Usage: python3 benchmarks/bench_backends.py
"""
import math
import sys
import time

import numpy as np

from relbound import _kernels_py

try:
    from relbound import _kernels
except ImportError:
    print("compiled backend not importable; build it with: pip install -e .")
    sys.exit(1)

JACOBI_DIMS = (2, 4, 8, 16)
MATS_PER_DIM = {2: 400, 4: 150, 8: 40, 16: 10}
SMIN_POINTS = 2000
REPEATS = 3


def _hermitian_batch(d, count, seed):
    rng = np.random.default_rng(seed)
    g = rng.standard_normal((count, d, d)) + 1j * rng.standard_normal((count, d, d))
    return (g + np.conj(np.swapaxes(g, 1, 2))) / 2.0


def _time_jacobi(mod, batch):
    best = math.inf
    out = None
    for _ in range(REPEATS):
        copies = [m.copy(order="C") for m in batch]
        start = time.perf_counter()
        results = [mod.jacobi_eigh(c)[0] for c in copies]
        best = min(best, time.perf_counter() - start)
        out = results
    return best, out


def _time_smin(mod, xs):
    best = math.inf
    out = None
    for _ in range(REPEATS):
        start = time.perf_counter()
        results = [mod.smin_golden(x, 1e-12)[0] for x in xs]
        best = min(best, time.perf_counter() - start)
        out = results
    return best, out


def main():
    print(f"{'kernel':<14}{'size':>10}{'pure (ms)':>12}{'cython (ms)':>13}{'speedup':>9}")
    for d in JACOBI_DIMS:
        batch = _hermitian_batch(d, MATS_PER_DIM[d], seed=d)
        t_py, w_py = _time_jacobi(_kernels_py, batch)
        t_cy, w_cy = _time_jacobi(_kernels, batch)
        worst = max(
            float(np.max(np.abs(np.sort(a) - np.sort(b))))
            for a, b in zip(w_py, w_cy)
        )
        if worst > 1e-12:
            print(f"backend mismatch at d={d}: max eigenvalue diff {worst:.3e}")
            sys.exit(1)
        label = f"{d}x{d} ({MATS_PER_DIM[d]})"
        print(
            f"{'jacobi_eigh':<14}{label:>10}{t_py * 1e3:>12.2f}"
            f"{t_cy * 1e3:>13.2f}{t_py / t_cy:>9.1f}x"
        )

    xs = np.linspace(1e-6, 0.999, SMIN_POINTS)
    t_py, s_py = _time_smin(_kernels_py, xs)
    t_cy, s_cy = _time_smin(_kernels, xs)
    if s_py != s_cy:
        print("backend mismatch in smin_golden values")
        sys.exit(1)
    print(
        f"{'smin_golden':<14}{f'{SMIN_POINTS} pts':>10}{t_py * 1e3:>12.2f}"
        f"{t_cy * 1e3:>13.2f}{t_py / t_cy:>9.1f}x"
    )


if __name__ == "__main__":
    main()
