"""Benchmark: compiled Jacobi kernel vs the pure-Python fallback.

Both implement the identical row-cyclic rotation sequence; this script
times them on random Hermitian matrices and checks they agree.

    python benchmarks/bench_jacobi.py [--sizes 8,16,32,64] [--repeats 3]
"""

import argparse
import time

import numpy as np

from bicomplex._kernels import jacobi_py

try:
    from bicomplex._kernels import _jacobi_cy
except ImportError:
    _jacobi_cy = None


def random_hermitian(rng, n):
    z = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    return 0.5 * (z + z.conj().T)


def time_kernel(fn, a, repeats):
    best = float("inf")
    result = None
    for _ in range(repeats):
        start = time.perf_counter()
        result = fn(a, 1e-13, 100)
        best = min(best, time.perf_counter() - start)
    return best, result


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--sizes", default="8,16,32,64")
    parser.add_argument("--repeats", type=int, default=3)
    args = parser.parse_args()
    sizes = [int(s) for s in args.sizes.split(",")]

    rng = np.random.default_rng(0)
    print(f"{'n':>4} {'python (s)':>12} {'cython (s)':>12} {'speedup':>8}  agreement")
    for n in sizes:
        a = random_hermitian(rng, n)
        t_py, (w_py, *_rest) = time_kernel(jacobi_py.jacobi_eigh, a, args.repeats)
        if _jacobi_cy is None:
            print(f"{n:>4} {t_py:>12.4f} {'-':>12} {'-':>8}  compiled kernel not built")
            continue
        t_cy, (w_cy, *_rest) = time_kernel(_jacobi_cy.jacobi_eigh, a, args.repeats)
        agree = np.allclose(np.sort(w_py), np.sort(w_cy), atol=1e-11)
        print(
            f"{n:>4} {t_py:>12.4f} {t_cy:>12.4f} {t_py / t_cy:>7.1f}x  "
            f"{'eigenvalues match' if agree else 'MISMATCH'}"
        )


if __name__ == "__main__":
    main()
