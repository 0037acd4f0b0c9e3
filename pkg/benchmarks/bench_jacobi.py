"""Compare the compiled and pure-Python Jacobi kernels.

    python benchmarks/bench_jacobi.py [--repeat N]

Times (1) raw 8x8 Hermitian eigensolves, (2) a 25x25 GHZ tangle sweep and
(3) full reports for random dense 3-qubit states, with each kernel swapped in.
GHZ partial transposes are nearly diagonal, so (2) is dominated by numpy
overhead outside the kernel; (3) is the kernel-bound case.
"""
import argparse
import time

import numpy as np

from fermitangle import _jacobi_py, hermitian
from fermitangle.fock import Party, make_custom_state, make_ghz_state
from fermitangle.measures import full_report, scenario_params
from fermitangle.rindler import R_MAX

try:
    from fermitangle import _jacobi
except ImportError:
    _jacobi = None


def random_hermitian(rng, n):
    x = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    return (x + x.conj().T) / 2


def time_eigensolves(kernel, mats, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        for m in mats:
            hermitian.eigenvalues_hermitian(m, kernel=kernel)
        best = min(best, time.perf_counter() - t0)
    return best / len(mats)


def time_reports(kernel, cases):
    saved = hermitian._kernel
    hermitian._kernel = kernel
    try:
        t0 = time.perf_counter()
        for state, params in cases:
            full_report(state, params)
        return time.perf_counter() - t0
    finally:
        hermitian._kernel = saved


def ghz_cases(n=25):
    ghz = make_ghz_state()
    grid = np.linspace(0, R_MAX, n)
    return [(ghz, scenario_params(ra, r)) for ra in grid for r in grid]


def random_cases(rng, count=200):
    out = []
    for _ in range(count):
        amps = rng.normal(size=8) + 1j * rng.normal(size=8)
        state = make_custom_state({format(i, "03b"): a for i, a in enumerate(amps)})
        out.append((state, dict(zip(Party, rng.uniform(0, R_MAX, size=3)))))
    return out


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--count", type=int, default=300)
    args = ap.parse_args()

    rng = np.random.default_rng(0)
    mats = [random_hermitian(rng, 8) for _ in range(args.count)]
    kernels = [("python", _jacobi_py)] + ([("cython", _jacobi)] if _jacobi else [])
    ghz, dense = ghz_cases(), random_cases(rng)
    results = {}
    print(f"{'kernel':<8} {'8x8 eig (us)':>14} {'GHZ 25x25 (s)':>15} {'200 random (s)':>16}")
    for name, k in kernels:
        row = (time_eigensolves(k, mats, args.repeat), time_reports(k, ghz), time_reports(k, dense))
        results[name] = row
        print(f"{name:<8} {row[0] * 1e6:>14.1f} {row[1]:>15.3f} {row[2]:>16.3f}")
    if len(results) == 2:
        py, cy = results["python"], results["cython"]
        print("speedup: " + ", ".join(
            f"{label} x{a / b:.1f}" for label, a, b in zip(("eigensolve", "GHZ", "random"), py, cy)))
    else:
        print("compiled kernel not built; only the fallback was timed")


if __name__ == "__main__":
    main()
