"""Graphs, Laplacians, spectra, and the smoothness quadratic form.

A graph is a weighted, undirected, connected simple graph stored as edge
arrays.  Its Laplacian L = diag(W 1) - W is kept as an edge-list operator;
dense matrices are materialized only inside the eigensolver and the dense
linear-solve path.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

import numpy as np

from . import _kernels
from .errors import (
    ConvergenceError,
    DimensionError,
    DisconnectedError,
    DuplicateEdgeError,
    EdgeIndexError,
    EigenError,
    NonPositiveWeightError,
    SelfLoopError,
)
from .iterative import conjugate_gradient, power_iteration

#: |lambda_1| above this is treated as an eigensolver failure on a
#: connected graph.
_ZERO_EIG_TOL = 1e-10


@dataclass(frozen=True)
class Graph:
    """Validated weighted undirected connected simple graph.

    ``src``/``dst``/``weight`` are parallel edge arrays with ``src < dst``;
    arrays are frozen (non-writeable) so instances can be shared freely
    across threads.
    """

    n: int
    src: np.ndarray
    dst: np.ndarray
    weight: np.ndarray

    @property
    def m(self) -> int:
        return self.src.shape[0]

    @property
    def degrees(self) -> np.ndarray:
        """Weighted degree vector W @ 1."""
        d = np.bincount(self.src, weights=self.weight, minlength=self.n)
        d += np.bincount(self.dst, weights=self.weight, minlength=self.n)
        return d

    def edges(self):
        """Edges as (i, j, w) tuples, in storage order."""
        return list(zip(self.src.tolist(), self.dst.tolist(), self.weight.tolist()))


def _frozen(a: np.ndarray) -> np.ndarray:
    a.setflags(write=False)
    return a


def graph_from_edges(n: int, edges) -> Graph:
    """Validate an edge list and build a Graph.

    Raises a GraphError subclass naming the offending edge for self-loops,
    duplicate pairs, non-positive weights, out-of-range endpoints, and
    disconnected inputs.
    """
    if n < 2:
        raise ValueError(f"need at least 2 nodes, got n={n}")
    edges = list(edges)
    src = np.empty(len(edges), dtype=np.int64)
    dst = np.empty(len(edges), dtype=np.int64)
    weight = np.empty(len(edges), dtype=np.float64)
    seen: set[tuple[int, int]] = set()
    for k, (i, j, w) in enumerate(edges):
        i, j, w = int(i), int(j), float(w)
        if not (0 <= i < n and 0 <= j < n):
            raise EdgeIndexError(f"edge ({i}, {j}) out of range for n={n}")
        if i == j:
            raise SelfLoopError(f"self-loop at node {i}")
        if not (w > 0) or not np.isfinite(w):
            raise NonPositiveWeightError(f"edge ({i}, {j}) has weight {w}")
        a, b = (i, j) if i < j else (j, i)
        if (a, b) in seen:
            raise DuplicateEdgeError(f"duplicate edge ({i}, {j})")
        seen.add((a, b))
        src[k], dst[k], weight[k] = a, b, w
    g = Graph(n=n, src=_frozen(src), dst=_frozen(dst), weight=_frozen(weight))
    ncomp = component_count(g)
    if ncomp != 1:
        raise DisconnectedError(f"graph has {ncomp} components")
    return g


def component_count(g: Graph) -> int:
    """Number of connected components (breadth-first sweep)."""
    neighbors: list[list[int]] = [[] for _ in range(g.n)]
    for i, j in zip(g.src.tolist(), g.dst.tolist()):
        neighbors[i].append(j)
        neighbors[j].append(i)
    seen = np.zeros(g.n, dtype=bool)
    count = 0
    for start in range(g.n):
        if seen[start]:
            continue
        count += 1
        seen[start] = True
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for v in neighbors[u]:
                if not seen[v]:
                    seen[v] = True
                    queue.append(v)
    return count


@dataclass(frozen=True)
class Laplacian:
    """L = diag(W 1) - W as an operator over the graph's edge arrays."""

    graph: Graph
    degrees: np.ndarray = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "degrees", _frozen(self.graph.degrees))

    @property
    def n(self) -> int:
        return self.graph.n

    def matvec(self, x: np.ndarray) -> np.ndarray:
        x = np.ascontiguousarray(x, dtype=np.float64)
        if x.shape != (self.n,):
            raise DimensionError(f"expected length {self.n}, got {x.shape}")
        out = np.empty(self.n, dtype=np.float64)
        g = self.graph
        _kernels.laplacian_matvec(g.src, g.dst, g.weight, self.degrees, x, out)
        return out

    def toarray(self) -> np.ndarray:
        g = self.graph
        dense = np.zeros((self.n, self.n), dtype=np.float64)
        dense[g.src, g.dst] = -g.weight
        dense[g.dst, g.src] = -g.weight
        dense[np.diag_indices(self.n)] = self.degrees
        return dense

    def trace(self) -> float:
        return float(self.degrees.sum())


def laplacian(g: Graph) -> Laplacian:
    return Laplacian(graph=g)


def quadratic_form(x: np.ndarray, g: Graph) -> float:
    """Smoothness penalty sum_{(i,j) in E} w_ij (x_i - x_j)^2 = x^T L x."""
    x = np.ascontiguousarray(x, dtype=np.float64)
    if x.shape != (g.n,):
        raise DimensionError(f"expected length {g.n}, got {x.shape}")
    return float(_kernels.edge_quadratic_form(g.src, g.dst, g.weight, x))


@dataclass(frozen=True)
class Spectrum:
    """Full eigendecomposition of a connected graph's Laplacian.

    ``eigenvalues`` is ascending with eigenvalues[0] clamped to exactly 0.0
    (known analytically for connected graphs), so downstream filter gains
    satisfy h_1 = 1 without special-casing.  ``eigenvectors`` holds
    orthonormal columns with a deterministic sign: the entry of largest
    magnitude in each column is positive.
    """

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray

    @property
    def n(self) -> int:
        return self.eigenvalues.shape[0]

    @property
    def lam2(self) -> float:
        return float(self.eigenvalues[1])

    @property
    def lamn(self) -> float:
        return float(self.eigenvalues[-1])


def _fix_signs(vectors: np.ndarray) -> np.ndarray:
    anchor = np.argmax(np.abs(vectors), axis=0)
    signs = np.sign(vectors[anchor, np.arange(vectors.shape[1])])
    signs[signs == 0] = 1.0
    return vectors * signs


def spectrum(lap: Laplacian, check: bool = True) -> Spectrum:
    """Dense symmetric eigendecomposition of L.

    Delegates to LAPACK's symmetric solver (tridiagonal reduction + QR).
    With ``check`` the residual ||L v - lam v|| and orthonormality are
    verified; above n=1500 the check samples columns to avoid an extra
    O(n^3) pass.
    """
    dense = lap.toarray()
    try:
        vals, vecs = np.linalg.eigh(dense)
    except np.linalg.LinAlgError as exc:
        raise EigenError(f"dense eigensolver failed: {exc}") from None
    if abs(vals[0]) > _ZERO_EIG_TOL * max(1.0, abs(vals[-1])):
        raise EigenError(
            f"smallest eigenvalue {vals[0]:.3e} not zero; graph not connected?"
        )
    vals = vals.copy()
    vals[0] = 0.0
    vecs = _fix_signs(vecs)

    if check:
        n = lap.n
        tol = 1e-8 * max(1.0, vals[-1])
        if n <= 1500:
            cols = np.arange(n)
        else:
            cols = np.unique(np.linspace(0, n - 1, 48).astype(np.int64))
        sub = vecs[:, cols]
        resid = np.abs(dense @ sub - sub * vals[cols]).max()
        if resid > tol:
            raise EigenError(f"eigenpair residual {resid:.3e} exceeds {tol:.3e}")
        gram = sub.T @ sub - np.eye(cols.shape[0])
        if np.abs(gram).max() > 1e-10:
            raise EigenError("eigenvectors not orthonormal to 1e-10")

    vals.setflags(write=False)
    vecs.setflags(write=False)
    return Spectrum(eigenvalues=vals, eigenvectors=vecs)


def extremal_eigenvalues(
    lap: Laplacian,
    rtol: float = 1e-6,
    max_iter: int = 200_000,
) -> tuple[float, float]:
    """(lam_2, lam_n) of the Laplacian without a dense decomposition.

    lam_n comes from power iteration on L.  lam_2 starts from power
    iteration on (s I - L), s slightly above lam_n, with the constant
    eigenvector deflated; if that iteration stalls (its rate degrades as
    1 - (lam_3 - lam_2)/s, hopeless on large graphs with a clustered low
    end), it escalates to inverse iteration, solving L z = v on the
    mean-zero subspace with Jacobi-preconditioned conjugate gradients.

    Both estimates stop on the residual certificate
    ||L v - lam v|| <= rtol * lam, which bounds the distance to the
    nearest true eigenvalue.
    """
    n = lap.n
    rng = np.random.Generator(np.random.Philox(np.random.SeedSequence(0x5EED_E165)))

    lamn, _, ok = power_iteration(
        lap.matvec, n, rng, rtol=rtol, max_iter=max_iter, deflate_constant=False
    )
    if not ok:
        raise ConvergenceError(f"largest eigenvalue unconverged after {max_iter} iterations")

    shift = lamn * (1.0 + 1e-3)

    def shifted(x):
        return shift * x - lap.matvec(x)

    budget = min(max_iter, 20_000)
    mu, v, ok = power_iteration(
        shifted, n, rng, rtol=None, max_iter=budget, deflate_constant=True,
        residual_target=lambda mu_: rtol * max(shift - mu_, np.finfo(float).tiny),
    )
    if ok:
        return shift - mu, lamn

    # Escalate: inverse iteration on the mean-zero subspace.
    diag = np.maximum(lap.degrees, np.finfo(float).tiny)
    x = v if v is not None else rng.standard_normal(n)
    x -= x.mean()
    x /= np.linalg.norm(x)
    for _ in range(300):
        z, solved = conjugate_gradient(
            lap.matvec, x, diag_precond=diag, rtol=1e-12,
            max_iter=20 * int(np.sqrt(n) + 100), project_constant=True,
        )
        if not solved:
            raise ConvergenceError("inner Laplacian solve for lam_2 did not converge")
        z -= z.mean()
        x = z / np.linalg.norm(z)
        lam = float(x @ lap.matvec(x))
        resid = np.linalg.norm(lap.matvec(x) - lam * x)
        if resid <= rtol * lam:
            return lam, lamn
    raise ConvergenceError("lam_2 inverse iteration exhausted its outer budget")
