"""Compare the numba and pure-numpy evaluation kernels.

Usage::

    python benchmarks/bench_kernels.py [--terms 40] [--vars 3] [--reps 2000]

Times the residual/scale kernel and the Jacobian kernel on a random flattened
system of the given size, once per backend.  The numba path is compiled here
explicitly, so the script reports both numbers no matter how the environment
variable ``REALHOMOTOPY_NO_NUMBA`` is set.
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from realhomotopy._kernels import (
    _loops_h_scale,
    _loops_jac_dlam,
    _numpy_h_scale,
    _numpy_jac_dlam,
)


def random_system(rng, n_eq, n_var, terms):
    coeffs = rng.normal(size=n_eq * terms)
    exps = rng.integers(-3, 6, size=(n_eq * terms, n_var)).astype(np.int64)
    vexp = np.abs(rng.normal(size=n_eq * terms)) * 4.0
    offs = np.arange(0, n_eq * terms + 1, terms, dtype=np.int64)
    x = rng.choice([-1.0, 1.0], n_var) * np.exp(rng.uniform(-1, 1, n_var))
    return coeffs, exps, vexp, offs, 0.7, x


def timeit(fn, args, reps):
    fn(*args)
    start = time.perf_counter()
    for _ in range(reps):
        fn(*args)
    return (time.perf_counter() - start) / reps


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--terms", type=int, default=40)
    parser.add_argument("--vars", type=int, default=3)
    parser.add_argument("--reps", type=int, default=2000)
    args = parser.parse_args()

    rng = np.random.default_rng(0)
    system = random_system(rng, args.vars, args.vars, args.terms)

    rows = [("numpy", _numpy_h_scale, _numpy_jac_dlam)]
    try:
        from numba import njit
    except ImportError:
        print("numba not installed; benchmarking the numpy backend only")
    else:
        rows.append(
            ("numba", njit(cache=True)(_loops_h_scale), njit(cache=True)(_loops_jac_dlam))
        )

    print(f"{args.vars} equations, {args.terms} terms each, {args.reps} reps")
    print(f"{'backend':<8} {'h_scale':>12} {'jac_dlam':>12}")
    timings = {}
    for name, h_fn, j_fn in rows:
        t_h = timeit(h_fn, system, args.reps)
        t_j = timeit(j_fn, system, args.reps)
        timings[name] = (t_h, t_j)
        print(f"{name:<8} {t_h * 1e6:>10.2f}us {t_j * 1e6:>10.2f}us")
    if "numba" in timings:
        sp_h = timings["numpy"][0] / timings["numba"][0]
        sp_j = timings["numpy"][1] / timings["numba"][1]
        print(f"speedup  {sp_h:>11.1f}x {sp_j:>11.1f}x")


if __name__ == "__main__":
    main()
