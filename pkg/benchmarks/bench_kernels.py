#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-numpy fallback.

Covers the loops that dominate experiment runtime: the alpha-grid MSE
decomposition (grid search inner loop), the envelope curve, and the
edge-list Laplacian operators, plus one end-to-end grid search at the
Fig.-2-style scenario size.

Usage: python benchmarks/bench_kernels.py [--repeat 5]
"""

import argparse
import time

import numpy as np

from lapreg import NoiseModel, gaussian_signal, laplacian, mse_curve, spectrum, watts_strogatz
from lapreg._kernels import _pykernels

try:
    from lapreg._kernels import _cykernels
except ImportError:
    _cykernels = None


def timeit(fn, repeat):
    best = np.inf
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def bench(name, make_call, repeat):
    py = timeit(make_call(_pykernels), repeat)
    if _cykernels is None:
        print(f"{name:<42s} python {py * 1e3:8.2f} ms   (no compiled backend)")
        return
    cy = timeit(make_call(_cykernels), repeat)
    print(
        f"{name:<42s} python {py * 1e3:8.2f} ms   cython {cy * 1e3:8.2f} ms   "
        f"speedup {py / cy:5.1f}x"
    )


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()
    rng = np.random.default_rng(0)

    # alpha-grid decomposition at the synthetic-experiment size
    n, t = 100, 10_000
    lam = np.sort(rng.uniform(0, 25, n))
    lam[0] = 0.0
    csq = rng.uniform(0, 4, n)
    gsq = np.full(n, 1.0)
    alphas = np.concatenate(([0.0], np.logspace(-5, 3.3, t)))

    bench(
        f"decomposition_curves (n={n}, t={t})",
        lambda mod: lambda: mod.decomposition_curves(lam, csq, gsq, alphas),
        args.repeat,
    )

    # and at real-graph scale
    n2 = 5000
    lam2 = np.sort(rng.uniform(0, 60, n2))
    lam2[0] = 0.0
    csq2 = rng.uniform(0, 4, n2)
    gsq2 = np.full(n2, 1.0)
    alphas2 = np.concatenate(([0.0], np.logspace(0, 8, 1000)))
    bench(
        f"decomposition_curves (n={n2}, t=1000)",
        lambda mod: lambda: mod.decomposition_curves(lam2, csq2, gsq2, alphas2),
        args.repeat,
    )

    bench(
        f"envelope_curve (t={t})",
        lambda mod: lambda: mod.envelope_curve(alphas, 2.5, 21.0, 99.0, 24.75, 0.25),
        args.repeat,
    )

    g = watts_strogatz(5000, 6, 0.1, seed=1)
    deg = laplacian(g).degrees
    x = rng.standard_normal(5000)
    out = np.empty(5000)
    bench(
        f"laplacian_matvec (n={g.n}, m={g.m})",
        lambda mod: lambda: mod.laplacian_matvec(g.src, g.dst, g.weight, deg, x, out),
        args.repeat,
    )
    bench(
        f"edge_quadratic_form (m={g.m})",
        lambda mod: lambda: mod.edge_quadratic_form(g.src, g.dst, g.weight, x),
        args.repeat,
    )

    # end-to-end: one grid-searched MSE curve per Monte-Carlo realization
    import lapreg._kernels as kernels
    from lapreg import erdos_renyi, grid_search

    g2 = erdos_renyi(100, 0.1, seed=2)
    spec = spectrum(laplacian(g2))
    xsig = gaussian_signal(100, 10.0, np.ones(100), seed=3)
    nm = NoiseModel.isotropic(100, 1.0)

    def grid_once(mod):
        # analysis resolves kernels through the shared module object, so
        # swapping the attribute redirects the whole call path
        def run():
            saved = kernels.decomposition_curves
            kernels.decomposition_curves = mod.decomposition_curves
            try:
                grid_search(mse_curve(spec, xsig, nm), 2000.0, 10_000)
            finally:
                kernels.decomposition_curves = saved

        return run

    bench("grid_search over mse_curve (n=100, t=1e4)", grid_once, args.repeat)


if __name__ == "__main__":
    main()
