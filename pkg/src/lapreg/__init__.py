"""Laplacian-regularized graph-signal denoising and its bias-variance analysis."""

from ._kernels import BACKEND as KERNEL_BACKEND
from .analysis import (
    DecompositionPoint,
    EsnrRegime,
    MonteCarloMse,
    RegimeReport,
    SnrSummary,
    UpperBoundMinimum,
    alpha_grid,
    bias_squared,
    esnr_regime,
    grid_search,
    minimize_upper_bound,
    monte_carlo_mse,
    mse_curve,
    mse_decomposition,
    mse_upper_bound,
    mse_upper_bound_curve,
    order_matching_alpha,
    snr_summary,
    snr_summary_averaged,
    snr_summary_band,
    snr_summary_random,
    spectral_coefficients,
    variance_exact,
    variance_von_neumann,
)
from .edgelist import load_edge_list
from .filtering import FilterGains, denoise_direct, denoise_spectral, filter_gains
from .generators import complete_graph, erdos_renyi, watts_strogatz
from .graphs import (
    Graph,
    Laplacian,
    Spectrum,
    extremal_eigenvalues,
    graph_from_edges,
    laplacian,
    quadratic_form,
    spectrum,
)
from .signals import (
    BandLimitedSignal,
    DeterministicSignal,
    GaussianSignal,
    NoiseModel,
    SignalSpec,
    average_samples,
    band_limited_signal,
    centered,
    gaussian_signal,
    observe,
    signal_power,
)
from .table import ResultTable, read_csv, write_csv

__version__ = "0.1.0"
