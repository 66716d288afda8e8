"""Compare the numba and pure-numpy kernels on representative workloads.

    python benchmarks/bench_kernels.py [--repeat N]

Both paths are called explicitly, so ERDOS_STRAUS_DISABLE_NUMBA has no effect here.
"""
import argparse
import time

import numpy as np

from erdos_straus import kernels
from erdos_straus.bezout import FamilyKind, _family_arrays
from erdos_straus.core import x_range


def pair_scan_cells(p):
    total = 0
    for x in x_range(p):
        a, n = 4 * x - p, p * x
        total += max(0, (2 * n) // a - max(x + 1, n // a + 1) + 1)
    return total


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn()
        times.append(time.perf_counter() - t0)
    return min(times), result


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    # compile outside the timed region
    kernels.pair_scan(7, 2, 5, use_numba=True)
    kernels.discriminant_grid(np.array([3]), np.array([4]), 3, use_numba=True)

    cases = []
    for p in (499, 997, 4999):
        xs = x_range(p)

        def run(use_numba, p=p, xs=xs):
            return len(kernels.pair_scan(p, xs[0], xs[-1], use_numba=use_numba)[0])

        cases.append((f"pair_scan p={p}", pair_scan_cells(p), run))

    for p, k_max, m_max in ((499, 5000, 2000), (997, 20000, 1000)):
        _, b, c = _family_arrays(FamilyKind.TYPE_I, p, k_max)

        def run(use_numba, b=b, c=c, m_max=m_max):
            return len(kernels.discriminant_grid(b, c, m_max, use_numba=use_numba)[0])

        cases.append((f"disc_grid p={p} k<={k_max} m<={m_max}", k_max * m_max, run))

    print(f"{'workload':<36}{'cells':>12}{'numba s':>10}{'numpy s':>10}{'speedup':>9}")
    for name, cells, run in cases:
        t_nb, r_nb = best_of(lambda: run(True), args.repeat)
        t_np, r_np = best_of(lambda: run(False), args.repeat)
        assert r_nb == r_np, f"{name}: paths disagree ({r_nb} vs {r_np})"
        print(f"{name:<36}{cells:>12,}{t_nb:>10.3f}{t_np:>10.3f}{t_np / t_nb:>8.1f}x")


if __name__ == "__main__":
    main()
