"""Bias-variance analysis of the Laplacian-regularized denoiser.

Covers the exact MSE decomposition, its closed-form upper envelope built
from the extremal eigenvalues, the effective SNR parameter theta, the
order-matching regularization value and its scaling regimes, grid search
and the envelope's polynomial minimizer, and Monte-Carlo estimation.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple

import numpy as np

from . import _kernels
from .errors import DimensionError, ZeroSignalPowerError
from .filtering import filter_gains
from .graphs import Graph, Spectrum
from .rng import make_generator, subseed
from .signals import (
    BandLimitedSignal,
    DeterministicSignal,
    NoiseModel,
    SignalSpec,
    centered,
    realize_signal,
    signal_power,
)

# ---------------------------------------------------------------------------
# exact decomposition


def spectral_coefficients(spec: Spectrum, x_star: np.ndarray) -> np.ndarray:
    """Graph Fourier coefficients v_i^T (x* - mean) of the centered signal."""
    x_star = np.asarray(x_star, dtype=np.float64)
    if x_star.shape != (spec.n,):
        raise DimensionError(f"signal has shape {x_star.shape}, expected ({spec.n},)")
    return spec.eigenvectors.T @ centered(x_star)


def mode_noise_weights(spec: Spectrum, nm: NoiseModel) -> np.ndarray:
    """Per-mode weights g_k = sum_i sigma_i^2 v_k(i)^2.

    These make trace(H^2 Sigma) = sum_k h_k^2 g_k exact for any diagonal
    covariance; for isotropic noise every g_k equals sigma^2.
    """
    if nm.n != spec.n:
        raise DimensionError(f"noise model n={nm.n}, spectrum n={spec.n}")
    return (spec.eigenvectors**2).T @ nm.variances


def _gains(spec: Spectrum, alpha: float) -> tuple[np.ndarray, np.ndarray]:
    g = filter_gains(spec, alpha)
    return g.h, g.q


def bias_squared(alpha: float, spec: Spectrum, x_star: np.ndarray) -> float:
    """Squared bias sum_{i>=2} q_i^2 (v_i^T centered(x*))^2."""
    _, q = _gains(spec, alpha)
    c = spectral_coefficients(spec, x_star)
    return float((q * q) @ (c * c))


def variance_exact(alpha: float, spec: Spectrum, nm: NoiseModel, samples: int = 1) -> float:
    """trace(H^2 Sigma) / samples, exact for diagonal Sigma.

    ``samples`` accounts for denoising the average of that many i.i.d.
    observations, which scales the whole variance by 1/samples and leaves
    the bias untouched.
    """
    h, _ = _gains(spec, alpha)
    g = mode_noise_weights(spec, nm)
    return float((h * h) @ g) / samples


def variance_von_neumann(alpha: float, spec: Spectrum, nm: NoiseModel) -> float:
    """sum_i h_i^2 sigma_(i)^2 with variances sorted descending.

    Pairs the non-increasing gains with the sorted noise levels, which by
    Von Neumann's trace inequality upper-bounds the exact variance; the two
    coincide for isotropic noise.
    """
    if nm.n != spec.n:
        raise DimensionError(f"noise model n={nm.n}, spectrum n={spec.n}")
    h, _ = _gains(spec, alpha)
    phi = np.sort(nm.variances)[::-1]
    return float((h * h) @ phi)


# ---------------------------------------------------------------------------
# effective SNR


@dataclass(frozen=True)
class SnrSummary:
    """Signal power, residual noise power, and the largest noise variance.

    p_signal is the centered signal energy sum_{i>=2} (v_i^T x*)^2;
    p_noise the sum of the n-1 smallest noise variances; theta the
    noise-to-signal parameter sqrt(p_noise/p_signal).
    """

    p_signal: float
    p_noise: float
    sigma_max_sq: float

    @property
    def theta(self) -> float:
        return float(np.sqrt(np.float64(self.p_noise) / np.float64(self.p_signal)))

    @property
    def e_snr(self) -> float:
        return float(np.float64(self.p_signal) / np.float64(self.p_noise))

    def averaged(self, samples: int) -> "SnrSummary":
        """Summary for the mean of ``samples`` i.i.d. observations."""
        if samples < 1:
            raise ValueError("samples must be >= 1")
        return SnrSummary(
            p_signal=self.p_signal,
            p_noise=self.p_noise / samples,
            sigma_max_sq=self.sigma_max_sq,
        )


def snr_summary(x_star: np.ndarray, nm: NoiseModel) -> SnrSummary:
    p_signal = signal_power(x_star)
    if not p_signal > 0:
        raise ZeroSignalPowerError("centered signal has zero power")
    return SnrSummary(
        p_signal=p_signal,
        p_noise=nm.tail_variance_sum,
        sigma_max_sq=nm.max_variance,
    )


def snr_summary_averaged(x_star: np.ndarray, nm: NoiseModel, samples: int) -> SnrSummary:
    """theta shrinks by 1/sqrt(samples): averaging divides noise power."""
    return snr_summary(x_star, nm).averaged(samples)


def snr_summary_band(coeffs, nm: NoiseModel) -> SnrSummary:
    """Band-limited signals: power is the energy off the constant basis.

    The weight on basis index 1 never contributes, so an active set
    containing only index 1 has no usable signal.
    """
    coeffs = list(coeffs)
    if not coeffs:
        raise ValueError("band-limited signal needs a nonempty active set")
    seen = set()
    p_signal = 0.0
    for j, omega in coeffs:
        j = int(j)
        if j < 1:
            raise IndexError(f"basis index {j} outside 1..n")
        if j in seen:
            raise ValueError(f"basis index {j} repeated")
        if omega == 0:
            raise ValueError(f"weight for basis index {j} must be nonzero")
        seen.add(j)
        if j >= 2:
            p_signal += float(omega) ** 2
    if not p_signal > 0:
        raise ZeroSignalPowerError("only the constant basis is active")
    return SnrSummary(
        p_signal=p_signal,
        p_noise=nm.tail_variance_sum,
        sigma_max_sq=nm.max_variance,
    )


def snr_summary_random(s, nm: NoiseModel) -> SnrSummary:
    """Random signals x* ~ N(mu 1, diag(s^2)): expected power (n-1) * mean(s^2)."""
    s = np.asarray(s, dtype=np.float64)
    if nm.n != s.shape[0]:
        raise DimensionError(f"stddev vector length {s.shape[0]}, noise model n={nm.n}")
    s_bar = float(np.mean(s**2))
    if not s_bar > 0:
        raise ZeroSignalPowerError("signal stddev vector is all zero")
    return SnrSummary(
        p_signal=(nm.n - 1) * s_bar,
        p_noise=nm.tail_variance_sum,
        sigma_max_sq=nm.max_variance,
    )


# ---------------------------------------------------------------------------
# the upper envelope


def _check_spectrum_bounds(lam2: float, lamn: float) -> None:
    if not (0 < lam2 <= lamn):
        raise ValueError(f"need 0 < lam2 <= lamn, got lam2={lam2}, lamn={lamn}")


def mse_upper_bound(alpha: float, lam2: float, lamn: float, snr: SnrSummary) -> float:
    """Closed-form envelope over the exact MSE.

    (1/(1+1/(alpha lamn)))^2 p_signal + (1/(1+alpha lam2))^2 p_noise
    + sigma_max^2.  Exact (equality) on complete graphs with identical
    edge weight and isotropic noise.  alpha = 0 evaluates the continuous
    limit p_noise + sigma_max^2.
    """
    _check_spectrum_bounds(lam2, lamn)
    alpha = float(alpha)
    if alpha < 0:
        raise ValueError(f"regularization parameter must be >= 0, got {alpha}")
    out = _kernels.envelope_curve(
        np.array([alpha]), lam2, lamn, snr.p_signal, snr.p_noise, snr.sigma_max_sq
    )
    return float(out[0])


@dataclass(frozen=True)
class DecompositionPoint:
    """One point of the regularization path: alpha with its error split."""

    alpha: float
    bias_sq: float
    variance: float
    mse: float
    mse_ub: float


def mse_decomposition(
    alpha: float,
    spec: Spectrum,
    x_star: np.ndarray,
    nm: NoiseModel,
    samples: int = 1,
) -> DecompositionPoint:
    """Exact MSE at one alpha, packaged with the envelope value."""
    b = bias_squared(alpha, spec, x_star)
    v = variance_exact(alpha, spec, nm, samples=samples)
    snr = SnrSummary(
        p_signal=signal_power(x_star),
        p_noise=nm.tail_variance_sum / samples,
        sigma_max_sq=nm.max_variance,
    )
    ub = mse_upper_bound(alpha, spec.lam2, spec.lamn, snr)
    return DecompositionPoint(alpha=float(alpha), bias_sq=b, variance=v, mse=b + v, mse_ub=ub)


def mse_curve(spec: Spectrum, x_star: np.ndarray, nm: NoiseModel, samples: int = 1):
    """Vectorized alpha -> exact MSE, for grid search over the path."""
    lam = np.ascontiguousarray(spec.eigenvalues)
    c = spectral_coefficients(spec, x_star)
    csq = np.ascontiguousarray(c * c)
    g = np.ascontiguousarray(mode_noise_weights(spec, nm) / samples)

    def curve(alphas):
        scalar = np.ndim(alphas) == 0
        a = np.ascontiguousarray(np.atleast_1d(alphas), dtype=np.float64)
        b, v = _kernels.decomposition_curves(lam, csq, g, a)
        out = b + v
        return float(out[0]) if scalar else out

    curve.accepts_arrays = True
    return curve


def mse_upper_bound_curve(snr: SnrSummary, lam2: float, lamn: float):
    """Vectorized alpha -> envelope value."""
    _check_spectrum_bounds(lam2, lamn)

    def curve(alphas):
        scalar = np.ndim(alphas) == 0
        a = np.ascontiguousarray(np.atleast_1d(alphas), dtype=np.float64)
        out = _kernels.envelope_curve(a, lam2, lamn, snr.p_signal, snr.p_noise, snr.sigma_max_sq)
        return float(out[0]) if scalar else out

    curve.accepts_arrays = True
    return curve


# ---------------------------------------------------------------------------
# order matching and regimes


def order_matching_alpha(theta: float, lam2: float, lamn: float, beta: float = 1.0) -> float:
    """The alpha equating the orders of the envelope's bias and noise terms.

    Unique positive root of lam2 lamn a^2 + lamn (1 - beta theta) a
    - beta theta = 0, i.e. ((1 + a lam2)/(1 + 1/(a lamn)))^2 =
    (beta theta)^2.  Evaluated with the cancellation-free quadratic
    formula so tiny theta stays accurate.
    """
    _check_spectrum_bounds(lam2, lamn)
    if not (theta > 0 and beta > 0):
        raise ValueError(f"need theta > 0 and beta > 0, got theta={theta}, beta={beta}")
    bt = beta * theta
    a = lam2 * lamn
    b = lamn * (1.0 - bt)
    disc = np.sqrt(b * b + 4.0 * a * bt)
    if b <= 0:
        return float((-b + disc) / (2.0 * a))
    return float(2.0 * bt / (b + disc))


class EsnrRegime(Enum):
    HIGH = "high-esnr"
    MODERATE = "moderate-esnr"
    LOW = "low-esnr"


@dataclass(frozen=True)
class RegimeReport:
    regime: EsnrRegime
    predicted_order: str
    predicted_alpha: float


def esnr_regime(
    theta: float, lam2: float, lamn: float, beta: float = 1.0, rho: float = 10.0
) -> RegimeReport:
    """Classify beta*theta against factor-of-rho bands and evaluate the
    predicted order of the matching alpha in that regime."""
    _check_spectrum_bounds(lam2, lamn)
    bt = beta * theta
    if bt <= 1.0 / rho:
        return RegimeReport(EsnrRegime.HIGH, "theta/lambda_n", theta / lamn)
    if bt >= rho:
        return RegimeReport(EsnrRegime.LOW, "theta/lambda_2", theta / lam2)
    return RegimeReport(
        EsnrRegime.MODERATE,
        "sqrt(theta/(lambda_n*lambda_2))",
        float(np.sqrt(theta / (lamn * lam2))),
    )


# ---------------------------------------------------------------------------
# minimizers


def alpha_grid(b: float, t: int) -> np.ndarray:
    """{0} followed by t log-uniform points spanning [b*1e-8, b]."""
    if not b > 0:
        raise ValueError(f"grid upper bound must be positive, got {b}")
    if t < 2:
        raise ValueError(f"need at least 2 grid points, got {t}")
    hi = np.log10(b)
    return np.concatenate(([0.0], np.logspace(hi - 8.0, hi, t)))


def grid_search(objective, b: float, t: int) -> tuple[float, float]:
    """argmin of the objective over alpha_grid(b, t); ties break to the
    smallest alpha.  Array-aware objectives are evaluated in one call."""
    alphas = alpha_grid(b, t)
    values = None
    if getattr(objective, "accepts_arrays", False):
        values = np.asarray(objective(alphas), dtype=np.float64)
    else:
        try:
            cand = np.asarray(objective(alphas), dtype=np.float64)
            if cand.shape == alphas.shape:
                values = cand
        except Exception:
            values = None
        if values is None:
            values = np.array([float(objective(a)) for a in alphas])
    idx = int(np.argmin(values))
    return float(alphas[idx]), float(values[idx])


@dataclass(frozen=True)
class UpperBoundMinimum:
    """Global minimizer of the envelope; ``interior`` is False when no
    positive stationary point wins and a boundary value is returned."""

    alpha: float
    value: float
    interior: bool


_ALPHA_INF = 1e12


def minimize_upper_bound(lam2: float, lamn: float, snr: SnrSummary) -> UpperBoundMinimum:
    """Exact minimizer of the envelope via its derivative's polynomial roots.

    Clearing denominators in d/da envelope(a) = 0 gives
    A a lamn^2 (1 + a lam2)^3 = B lam2 (1 + a lamn)^3 with A = p_signal and
    B = p_noise: a quartic in a (degree collapses when lam2 = lamn).  Roots
    come from the companion matrix; each real positive root competes with
    the boundary surrogates a -> 0+ and a -> infinity (1e12).
    """
    _check_spectrum_bounds(lam2, lamn)
    a_sig = snr.p_signal
    b_noise = snr.p_noise
    if a_sig == 0.0 and b_noise == 0.0:
        return UpperBoundMinimum(alpha=0.0, value=snr.sigma_max_sq, interior=False)

    coeffs = np.array(
        [
            a_sig * lamn**2 * lam2**3,
            3.0 * a_sig * lamn**2 * lam2**2 - b_noise * lam2 * lamn**3,
            3.0 * a_sig * lamn**2 * lam2 - 3.0 * b_noise * lam2 * lamn**2,
            a_sig * lamn**2 - 3.0 * b_noise * lam2 * lamn,
            -b_noise * lam2,
        ]
    )
    roots = np.roots(coeffs) if np.any(coeffs != 0) else np.array([])
    stationary = sorted(
        float(r.real)
        for r in roots
        if r.real > 0 and abs(r.imag) <= 1e-9 * abs(r)
    )
    candidates = [0.0] + stationary + [_ALPHA_INF]
    values = [mse_upper_bound(c, lam2, lamn, snr) for c in candidates]
    idx = int(np.argmin(values))
    return UpperBoundMinimum(
        alpha=candidates[idx],
        value=values[idx],
        interior=candidates[idx] in stationary,
    )


# ---------------------------------------------------------------------------
# Monte-Carlo estimate


class MonteCarloMse(NamedTuple):
    mean: float
    stderr: float


def monte_carlo_mse(
    g: Graph,
    spec: Spectrum,
    sig: SignalSpec,
    nm: NoiseModel,
    alpha: float,
    realizations: int,
    seed,
    samples: int = 1,
    redraw_signal: bool = True,
) -> MonteCarloMse:
    """Mean and standard error of ||x_hat - x*||^2 over seeded realizations.

    Realization r derives its streams from spawn keys (r, 0) for the signal
    and (r, 1+t) for the t-th of ``samples`` noise draws, so results do not
    depend on evaluation order or chunking.  Gaussian signal specs redraw
    x* each realization unless ``redraw_signal`` is False.
    """
    if realizations < 1:
        raise ValueError("need at least one realization")
    if samples < 1:
        raise ValueError("samples must be >= 1")
    if nm.n != g.n:
        raise DimensionError(f"noise model n={nm.n}, graph n={g.n}")
    n = g.n
    gains = filter_gains(spec, alpha)
    v = spec.eigenvectors

    fixed_x = None
    if isinstance(sig, (DeterministicSignal, BandLimitedSignal)) or not redraw_signal:
        fixed_x = realize_signal(sig, n, spec, subseed(seed, 0, 0))

    errors = np.empty(realizations)
    chunk = max(1, min(realizations, 4_000_000 // n))
    for lo in range(0, realizations, chunk):
        hi = min(lo + chunk, realizations)
        xs = np.empty((n, hi - lo))
        ys = np.empty((n, hi - lo))
        for r in range(lo, hi):
            x = fixed_x if fixed_x is not None else realize_signal(
                sig, n, spec, subseed(seed, r, 0)
            )
            noise = np.zeros(n)
            for t in range(samples):
                e = make_generator(subseed(seed, r, 1 + t)).standard_normal(n) * nm.sigma
                noise += e
            xs[:, r - lo] = x
            ys[:, r - lo] = x + noise / samples
        xhat = v @ (gains.h[:, None] * (v.T @ ys))
        errors[lo:hi] = np.sum((xhat - xs) ** 2, axis=0)

    mean = float(np.mean(errors))
    stderr = 0.0
    if realizations > 1:
        stderr = float(np.std(errors, ddof=1) / np.sqrt(realizations))
    return MonteCarloMse(mean=mean, stderr=stderr)
