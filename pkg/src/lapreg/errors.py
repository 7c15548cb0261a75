"""Exception types raised across the package."""


class GraphError(ValueError):
    """Invalid graph data; messages name the offending datum."""


class SelfLoopError(GraphError):
    pass


class DuplicateEdgeError(GraphError):
    pass


class NonPositiveWeightError(GraphError):
    pass


class EdgeIndexError(GraphError):
    pass


class DisconnectedError(GraphError):
    pass


class GenerationError(RuntimeError):
    """Random-graph sampling exhausted its attempt budget."""


class EigenError(RuntimeError):
    """Dense eigendecomposition failed or violated its residual tolerance."""


class ConvergenceError(RuntimeError):
    """Iterative eigenvalue estimation ran out of iterations."""


class SolveError(RuntimeError):
    """Linear solve failed to reach the requested residual."""


class DimensionError(ValueError):
    """Vector length does not match the graph's node count."""


class ZeroSignalPowerError(ValueError):
    """Centered signal carries no energy, so no SNR is defined."""


class EdgeListParseError(ValueError):
    """Malformed edge-list line; the message carries the line number."""
