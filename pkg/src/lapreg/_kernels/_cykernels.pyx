# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels: regularization-path curves and edge-list operators.

These are the inner loops that dominate experiment runtime (an alpha grid of
10^4 points times n eigenmodes, repeated per Monte-Carlo realization, plus
sparse Laplacian matvecs for power iteration on large graphs).  Semantics
must stay in lockstep with ``_pykernels``; the test suite checks parity.
"""

import numpy as np

cimport numpy as cnp

cnp.import_array()


def decomposition_curves(const double[::1] eigenvalues,
                         const double[::1] signal_coeff_sq,
                         const double[::1] mode_noise_weights,
                         const double[::1] alphas):
    """Squared bias and variance of the spectral filter over an alpha grid.

    For each alpha: h_k = 1/(1 + alpha*lam_k), q_k = 1 - h_k,
    bias_sq = sum_k q_k^2 * c_k^2 and variance = sum_k h_k^2 * g_k, where
    c_k^2 are squared spectral coefficients of the centered target signal
    and g_k are per-mode noise weights (sigma^2 for isotropic noise).
    """
    cdef Py_ssize_t n = eigenvalues.shape[0]
    cdef Py_ssize_t t = alphas.shape[0]
    if signal_coeff_sq.shape[0] != n or mode_noise_weights.shape[0] != n:
        raise ValueError("eigenvalue/coefficient/weight lengths differ")

    bias_sq = np.empty(t, dtype=np.float64)
    variance = np.empty(t, dtype=np.float64)
    cdef double[::1] b = bias_sq
    cdef double[::1] v = variance
    cdef Py_ssize_t i, k
    cdef double a, h, q, acc_b, acc_v

    with nogil:
        for i in range(t):
            a = alphas[i]
            acc_b = 0.0
            acc_v = 0.0
            for k in range(n):
                h = 1.0 / (1.0 + a * eigenvalues[k])
                q = 1.0 - h
                acc_b += q * q * signal_coeff_sq[k]
                acc_v += h * h * mode_noise_weights[k]
            b[i] = acc_b
            v[i] = acc_v
    return bias_sq, variance


def envelope_curve(const double[::1] alphas, double lam2, double lamn,
                   double p_signal, double p_noise, double sigma_max_sq):
    """MSE upper envelope over an alpha grid.

    value = (1/(1 + 1/(a*lamn)))^2 * p_signal
          + (1/(1 + a*lam2))^2 * p_noise + sigma_max_sq

    At a = 0 the first factor evaluates to 0 through IEEE semantics
    (1/(1 + inf) == 0), matching the continuous limit.
    """
    cdef Py_ssize_t t = alphas.shape[0]
    out = np.empty(t, dtype=np.float64)
    cdef double[::1] o = out
    cdef Py_ssize_t i
    cdef double a, qf, hf

    with nogil:
        for i in range(t):
            a = alphas[i]
            qf = 1.0 / (1.0 + 1.0 / (a * lamn))
            hf = 1.0 / (1.0 + a * lam2)
            o[i] = qf * qf * p_signal + hf * hf * p_noise + sigma_max_sq
    return out


def edge_quadratic_form(const cnp.int64_t[::1] src, const cnp.int64_t[::1] dst,
                        const double[::1] weight, const double[::1] x):
    """sum over edges of w_ij * (x_i - x_j)^2."""
    cdef Py_ssize_t m = src.shape[0]
    cdef Py_ssize_t e
    cdef double d, acc = 0.0
    with nogil:
        for e in range(m):
            d = x[src[e]] - x[dst[e]]
            acc += weight[e] * d * d
    return acc


def laplacian_matvec(const cnp.int64_t[::1] src, const cnp.int64_t[::1] dst,
                     const double[::1] weight, const double[::1] degree,
                     const double[::1] x, double[::1] out):
    """out = (diag(degree) - W) @ x accumulated straight off the edge list."""
    cdef Py_ssize_t n = x.shape[0]
    cdef Py_ssize_t m = src.shape[0]
    cdef Py_ssize_t e, i
    with nogil:
        for i in range(n):
            out[i] = degree[i] * x[i]
        for e in range(m):
            out[src[e]] -= weight[e] * x[dst[e]]
            out[dst[e]] -= weight[e] * x[src[e]]
    return None
