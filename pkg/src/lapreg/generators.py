"""Seeded generators for the synthetic graph families used in experiments.

Random samples are conditioned on connectivity by reject-and-resample with
an attempt cap; all draws continue a single Philox stream per call, so a
(parameters, seed) pair is fully reproducible.
"""

from __future__ import annotations

import logging

import numpy as np

from .errors import DisconnectedError, GenerationError
from .graphs import Graph, graph_from_edges
from .rng import make_generator

log = logging.getLogger(__name__)

_MAX_ATTEMPTS = 1000


def complete_graph(n: int, w: float = 1.0) -> Graph:
    """All n(n-1)/2 edges with identical weight w."""
    src, dst = np.triu_indices(n, k=1)
    return graph_from_edges(n, zip(src.tolist(), dst.tolist(), [w] * src.shape[0]))


def erdos_renyi(n: int, p: float, seed) -> Graph:
    """G(n, p) with unit weights, resampled until connected."""
    if not (0 < p <= 1):
        raise ValueError(f"p must be in (0, 1], got {p}")
    rng = make_generator(seed)
    all_src, all_dst = np.triu_indices(n, k=1)
    for attempt in range(1, _MAX_ATTEMPTS + 1):
        mask = rng.random(all_src.shape[0]) < p
        src = all_src[mask]
        dst = all_dst[mask]
        try:
            g = graph_from_edges(n, zip(src.tolist(), dst.tolist(), [1.0] * src.shape[0]))
        except DisconnectedError:
            continue
        if attempt > 1:
            log.debug("erdos_renyi(n=%d, p=%g) connected on attempt %d", n, p, attempt)
        return g
    raise GenerationError(
        f"no connected sample of erdos_renyi(n={n}, p={p}) in {_MAX_ATTEMPTS} attempts"
    )


def watts_strogatz(n: int, d: int, q: float, seed) -> Graph:
    """Ring lattice of degree d with each edge rewired with probability q.

    Rewiring moves the far endpoint of a lattice edge to a uniformly random
    node, skipping self-loops and existing edges, so the edge count n*d/2 is
    preserved.  Resampled until connected.
    """
    if d % 2 != 0 or not (2 <= d < n):
        raise ValueError(f"need even d with 2 <= d < n, got d={d}, n={n}")
    if not (0 <= q <= 1):
        raise ValueError(f"q must be in [0, 1], got {q}")
    rng = make_generator(seed)
    for attempt in range(1, _MAX_ATTEMPTS + 1):
        edge_list: list[tuple[int, int]] = []
        edge_set: set[tuple[int, int]] = set()
        for k in range(1, d // 2 + 1):
            for i in range(n):
                j = (i + k) % n
                pair = (min(i, j), max(i, j))
                edge_list.append(pair)
                edge_set.add(pair)
        rewire = rng.random(len(edge_list)) < q
        for e, flagged in enumerate(rewire):
            if not flagged:
                continue
            i, j = edge_list[e]
            for _ in range(8 * n):
                u = int(rng.integers(0, n))
                pair = (min(i, u), max(i, u))
                if u != i and pair not in edge_set:
                    edge_set.remove(edge_list[e])
                    edge_set.add(pair)
                    edge_list[e] = pair
                    break
            # saturated node: keep the lattice edge
        try:
            g = graph_from_edges(n, [(i, j, 1.0) for i, j in edge_list])
        except DisconnectedError:
            continue
        if attempt > 1:
            log.debug(
                "watts_strogatz(n=%d, d=%d, q=%g) connected on attempt %d", n, d, q, attempt
            )
        return g
    raise GenerationError(
        f"no connected sample of watts_strogatz(n={n}, d={d}, q={q}) "
        f"in {_MAX_ATTEMPTS} attempts"
    )
