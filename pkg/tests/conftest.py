import numpy as np

from lapreg import (
    complete_graph,
    erdos_renyi,
    graph_from_edges,
    laplacian,
    spectrum,
    watts_strogatz,
)


def p2(w: float = 1.0):
    return graph_from_edges(2, [(0, 1, w)])


def cycle_graph(n: int):
    return graph_from_edges(n, [(i, (i + 1) % n, 1.0) for i in range(n)])


def mixed_graphs(count: int, seed: int = 0, small: bool = True):
    """A varied bag of connected graphs for property tests."""
    rng = np.random.default_rng(seed)
    out = []
    makers = [
        lambda s: erdos_renyi(int(rng.integers(10, 60)), float(rng.uniform(0.15, 0.6)), s),
        lambda s: watts_strogatz(int(rng.integers(10, 40)) * 2, 4, float(rng.uniform(0, 0.8)), s),
        lambda s: complete_graph(int(rng.integers(3, 15)), float(rng.uniform(0.5, 3.0))),
        lambda s: cycle_graph(int(rng.integers(4, 30))),
    ]
    for k in range(count):
        out.append(makers[k % len(makers)](seed * 1000 + k))
    return out


def spectrum_of(g):
    return spectrum(laplacian(g))
