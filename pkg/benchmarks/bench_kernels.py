"""Compare the compiled and pure-Python kernels.

    python3 benchmarks/bench_kernels.py [--repeat N]

Times the RK4 integration of the flat-normal type I ODE and a batched cubic
Hermite evaluation, checks both backends agree, and prints the speed-up.
"""
import argparse
import time

import numpy as np

from grsurf import _pykernels as py

try:
    from grsurf import _ckernels as cy
except ImportError:  # pragma: no cover - extension not built
    cy = None


def best_of(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.split("\n")[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--h", type=float, default=1e-4, help="RK4 step (span is [1, 2])")
    ap.add_argument("--points", type=int, default=200_000, help="Hermite evaluation points")
    args = ap.parse_args(argv)
    if cy is None:
        print("compiled extension not available; nothing to compare")
        return 1

    rk_args = (py.FLAT_NORMAL, 1, 1.0, 1.0, 0.0, 1.0, 0.5, 0.0, 2.0, args.h)
    ref = py.rk4(*rk_args)
    m = ref[0]
    x = np.random.default_rng(0).uniform(m[0], m[-1], args.points)
    herm_args = (ref[0], ref[1], ref[2], ref[3], x)

    rows = []
    for name, fn_py, fn_cy in (
        (f"rk4 ({ref[0].size - 1} steps)", lambda: py.rk4(*rk_args), lambda: cy.rk4(*rk_args)),
        (f"hermite ({args.points} pts)", lambda: py.hermite_eval(*herm_args), lambda: cy.hermite_eval(*herm_args)),
    ):
        a, b = fn_py(), fn_cy()
        diff = max(float(np.max(np.abs(np.asarray(p) - np.asarray(q)))) for p, q in zip(a[:3], b[:3]))
        t_py, t_cy = best_of(fn_py, args.repeat), best_of(fn_cy, args.repeat)
        rows.append((name, t_py, t_cy, t_py / t_cy, diff))

    print(f"{'kernel':<24} {'python [s]':>11} {'cython [s]':>11} {'speed-up':>9} {'max |diff|':>11}")
    for name, t_py, t_cy, sp, diff in rows:
        print(f"{name:<24} {t_py:>11.4f} {t_cy:>11.5f} {sp:>8.1f}x {diff:>11.2e}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
