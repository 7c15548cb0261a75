"""Matrix-free iterative building blocks: power iteration and PCG.

Both operate on a matvec callable so they run straight off edge-list
operators without materializing matrices.
"""

from __future__ import annotations

import numpy as np


def power_iteration(
    matvec,
    n: int,
    rng: np.random.Generator,
    rtol: float | None,
    max_iter: int,
    deflate_constant: bool = False,
    residual_target=None,
):
    """Dominant eigenpair of a symmetric PSD operator.

    Returns (rayleigh, vector, converged).  Convergence is certified by the
    residual ||A v - lam v||, which bounds the distance from the Rayleigh
    quotient to the nearest true eigenvalue.  ``residual_target`` overrides
    the default threshold rtol * |lam| with a callable of the current
    estimate; ``deflate_constant`` keeps iterates orthogonal to the
    all-ones vector.
    """
    v = rng.standard_normal(n)
    if deflate_constant:
        v -= v.mean()
    v /= np.linalg.norm(v)
    lam = 0.0
    check_every = 10
    for it in range(1, max_iter + 1):
        y = matvec(v)
        if deflate_constant:
            y -= y.mean()
        norm_y = np.linalg.norm(y)
        if norm_y == 0.0:
            # v is annihilated: Rayleigh quotient 0 with zero residual.
            return 0.0, v, True
        lam = float(v @ y)
        if it % check_every == 0 or it == max_iter:
            resid = np.linalg.norm(y - lam * v)
            target = (
                residual_target(lam)
                if residual_target is not None
                else rtol * max(abs(lam), np.finfo(float).tiny)
            )
            if resid <= target:
                return lam, y / norm_y, True
        v = y / norm_y
    return lam, v, False


def conjugate_gradient(
    matvec,
    b: np.ndarray,
    diag_precond: np.ndarray | None = None,
    rtol: float = 1e-12,
    atol: float = 0.0,
    max_iter: int | None = None,
    project_constant: bool = False,
    x0: np.ndarray | None = None,
):
    """Jacobi-preconditioned CG for SPD (or PSD-on-subspace) systems.

    Returns (x, converged) with convergence at ||r|| <= max(rtol*||b||, atol).
    With ``project_constant`` the iteration is confined to the mean-zero
    subspace, which makes singular Laplacian systems well-posed when b is
    mean-free.
    """
    b = np.asarray(b, dtype=np.float64)
    n = b.shape[0]
    if max_iter is None:
        max_iter = 10 * n
    inv_m = None if diag_precond is None else 1.0 / np.asarray(diag_precond, dtype=np.float64)

    def project(u):
        if project_constant:
            u -= u.mean()
        return u

    b = project(b.copy())
    x = np.zeros(n) if x0 is None else project(x0.astype(np.float64).copy())
    target = max(rtol * np.linalg.norm(b), atol)

    r = b - matvec(x) if x.any() else b.copy()
    r = project(r)
    if np.linalg.norm(r) <= target:
        return x, True
    z = r * inv_m if inv_m is not None else r.copy()
    p = z.copy()
    rz = float(r @ z)
    for _ in range(max_iter):
        ap = project(matvec(p))
        denom = float(p @ ap)
        if denom <= 0.0:
            break
        step = rz / denom
        x += step * p
        r -= step * ap
        if np.linalg.norm(r) <= target:
            return project(x), True
        z = r * inv_m if inv_m is not None else r
        rz_next = float(r @ z)
        p = z + (rz_next / rz) * p
        rz = rz_next
    return project(x), np.linalg.norm(r) <= target
