"""Pure-numpy fallback for the compiled kernels.

Same contracts as ``_cykernels``.  The alpha-grid curves are evaluated in
chunks so the (chunk x n) temporaries stay cache- and memory-friendly.
"""

from __future__ import annotations

import numpy as np

_CHUNK = 2048


def decomposition_curves(eigenvalues, signal_coeff_sq, mode_noise_weights, alphas):
    lam = np.asarray(eigenvalues, dtype=np.float64)
    csq = np.asarray(signal_coeff_sq, dtype=np.float64)
    gsq = np.asarray(mode_noise_weights, dtype=np.float64)
    a = np.asarray(alphas, dtype=np.float64)
    if csq.shape != lam.shape or gsq.shape != lam.shape:
        raise ValueError("eigenvalue/coefficient/weight lengths differ")

    bias_sq = np.empty(a.shape[0], dtype=np.float64)
    variance = np.empty(a.shape[0], dtype=np.float64)
    for lo in range(0, a.shape[0], _CHUNK):
        hi = min(lo + _CHUNK, a.shape[0])
        h = 1.0 / (1.0 + np.multiply.outer(a[lo:hi], lam))
        q = 1.0 - h
        np.square(h, out=h)
        np.square(q, out=q)
        bias_sq[lo:hi] = q @ csq
        variance[lo:hi] = h @ gsq
    return bias_sq, variance


def envelope_curve(alphas, lam2, lamn, p_signal, p_noise, sigma_max_sq):
    a = np.asarray(alphas, dtype=np.float64)
    # 1/(a*lamn) overflows to inf at a == 0, which drives the factor to the
    # correct limit 0; silence only that warning.
    with np.errstate(divide="ignore"):
        qf = 1.0 / (1.0 + 1.0 / (a * lamn))
    hf = 1.0 / (1.0 + a * lam2)
    return qf * qf * p_signal + hf * hf * p_noise + sigma_max_sq


def edge_quadratic_form(src, dst, weight, x):
    x = np.asarray(x, dtype=np.float64)
    d = x[src] - x[dst]
    return float(np.dot(np.asarray(weight, dtype=np.float64), d * d))


def laplacian_matvec(src, dst, weight, degree, x, out):
    x = np.asarray(x, dtype=np.float64)
    w = np.asarray(weight, dtype=np.float64)
    n = x.shape[0]
    np.multiply(degree, x, out=out)
    out -= np.bincount(src, weights=w * x[dst], minlength=n)
    out -= np.bincount(dst, weights=w * x[src], minlength=n)
    return None
