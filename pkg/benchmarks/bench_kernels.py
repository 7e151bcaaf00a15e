"""Benchmark the compiled kernels against the NumPy fallback.

Times the raw matvec at several sizes and a full operator-norm solve with
each backend.  Run as:

    python3 benchmarks/bench_kernels.py
"""

import argparse
import time

import numpy as np

from cesaronorm import _kernels_py, cesaro, hadamard, kernels

try:
    from cesaronorm import _kernels
except ImportError:
    _kernels = None


def time_call(fn, repeats):
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def bench_matvec(sizes, repeats):
    rng = np.random.default_rng(0)
    print(f"{'N':>9}  {'compiled':>12}  {'numpy':>12}  {'speedup':>8}")
    for n in sizes:
        op = hadamard.from_kernel(cesaro.coefficients(n, 0.4))
        x = rng.standard_normal(op.dimension)
        out = np.empty_like(x)
        t_py = time_call(lambda: _kernels_py.matvec(op.c, op.d, x, out), repeats)
        if _kernels is None:
            print(f"{n:>9}  {'n/a':>12}  {t_py * 1e6:>10.1f}us  {'':>8}")
            continue
        t_c = time_call(lambda: _kernels.matvec(op.c, op.d, x, out), repeats)
        print(
            f"{n:>9}  {t_c * 1e6:>10.1f}us  {t_py * 1e6:>10.1f}us  "
            f"{t_py / t_c:>7.2f}x"
        )


def bench_solve(n, alpha):
    op = hadamard.from_kernel(cesaro.coefficients(n, alpha))
    results = {}
    backends = [("numpy", _kernels_py)]
    if _kernels is not None:
        backends.insert(0, ("compiled", _kernels))
    saved = (kernels.matvec, kernels.matvec_adjoint)
    try:
        for name, impl in backends:
            kernels.matvec = impl.matvec
            kernels.matvec_adjoint = impl.matvec_adjoint
            t0 = time.perf_counter()
            res = hadamard.operator_norm(op, tol=1e-8)
            results[name] = (time.perf_counter() - t0, res)
    finally:
        kernels.matvec, kernels.matvec_adjoint = saved
    print(f"\noperator norm at n={n}, alpha={alpha}:")
    for name, (elapsed, res) in results.items():
        print(
            f"  {name:>8}: {elapsed:.3f}s  norm={res.norm:.12f}  "
            f"iters={res.iterations}"
        )


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeats", type=int, default=20)
    parser.add_argument("--solve-n", type=int, default=2**18)
    parser.add_argument("--solve-alpha", type=float, default=0.75)
    args = parser.parse_args()
    print(f"active backend: {kernels.BACKEND}")
    bench_matvec([2**e for e in range(10, 21, 2)], args.repeats)
    bench_solve(args.solve_n, args.solve_alpha)


if __name__ == "__main__":
    main()
