"""Ground-truth signal models, the noise model, and observation sampling."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimensionError, ZeroSignalPowerError
from .graphs import Spectrum
from .rng import make_generator


@dataclass(frozen=True)
class NoiseModel:
    """Zero-mean noise with diagonal covariance diag(sigma_1^2 ... sigma_n^2)."""

    sigma: np.ndarray

    def __post_init__(self):
        s = np.ascontiguousarray(self.sigma, dtype=np.float64)
        if s.ndim != 1:
            raise ValueError("sigma must be a 1-d vector of standard deviations")
        if np.any(s < 0) or not np.all(np.isfinite(s)):
            raise ValueError("standard deviations must be finite and >= 0")
        if not np.any(s > 0):
            raise ValueError("at least one sigma_i must be positive")
        s.setflags(write=False)
        object.__setattr__(self, "sigma", s)

    @classmethod
    def isotropic(cls, n: int, sigma: float) -> "NoiseModel":
        return cls(sigma=np.full(n, float(sigma)))

    @property
    def n(self) -> int:
        return self.sigma.shape[0]

    @property
    def variances(self) -> np.ndarray:
        return self.sigma**2

    @property
    def max_variance(self) -> float:
        return float(np.max(self.variances))

    @property
    def tail_variance_sum(self) -> float:
        """Sum of the n-1 smallest variances."""
        v = self.variances
        return float(v.sum() - v.max())


@dataclass(frozen=True)
class DeterministicSignal:
    values: np.ndarray


@dataclass(frozen=True)
class GaussianSignal:
    """x* ~ N(mean * 1, diag(stddev^2)), redrawn per Monte-Carlo realization."""

    mean: float
    stddev: np.ndarray


@dataclass(frozen=True)
class BandLimitedSignal:
    """Linear combination of Laplacian eigenvectors; basis indices are 1-based."""

    coeffs: tuple[tuple[int, float], ...]


SignalSpec = DeterministicSignal | GaussianSignal | BandLimitedSignal


def gaussian_signal(n: int, mu: float, s, seed) -> np.ndarray:
    """One draw of N(mu * 1_n, diag(s^2)); deterministic per seed."""
    s = np.asarray(s, dtype=np.float64)
    if s.shape != (n,):
        raise DimensionError(f"stddev vector has shape {s.shape}, expected ({n},)")
    if np.any(s < 0):
        raise ValueError("stddev entries must be >= 0")
    return mu + make_generator(seed).standard_normal(n) * s


def band_limited_signal(spec: Spectrum, coeffs) -> np.ndarray:
    """x* = sum_j omega_j v_j over the active basis (1-based indices)."""
    coeffs = list(coeffs)
    if not coeffs:
        raise ValueError("band-limited signal needs a nonempty active set")
    seen = set()
    x = np.zeros(spec.n)
    for j, omega in coeffs:
        j = int(j)
        if not (1 <= j <= spec.n):
            raise IndexError(f"basis index {j} outside 1..{spec.n}")
        if j in seen:
            raise ValueError(f"basis index {j} repeated")
        if omega == 0:
            raise ValueError(f"weight for basis index {j} must be nonzero")
        seen.add(j)
        x += float(omega) * spec.eigenvectors[:, j - 1]
    return x


def observe(x_star: np.ndarray, nm: NoiseModel, seed) -> np.ndarray:
    """y = x* + e with e ~ N(0, diag(sigma^2)); deterministic per seed."""
    x_star = np.asarray(x_star, dtype=np.float64)
    if x_star.shape != (nm.n,):
        raise DimensionError(f"signal has shape {x_star.shape}, noise model n={nm.n}")
    return x_star + make_generator(seed).standard_normal(nm.n) * nm.sigma


def average_samples(samples) -> np.ndarray:
    samples = list(samples)
    if not samples:
        raise ValueError("need at least one sample to average")
    first = np.asarray(samples[0], dtype=np.float64)
    for s in samples[1:]:
        if np.asarray(s).shape != first.shape:
            raise DimensionError("samples have differing lengths")
    return np.mean(np.asarray(samples, dtype=np.float64), axis=0)


def centered(x: np.ndarray) -> np.ndarray:
    """x minus its mean; orthogonal to the constant vector."""
    x = np.asarray(x, dtype=np.float64)
    return x - x.mean()


def signal_power(x: np.ndarray) -> float:
    """Energy of the centered signal, ||x - mean(x)||^2.

    By Parseval this equals the spectral energy outside the constant mode,
    sum_{i>=2} (v_i^T x)^2, for any orthonormal Laplacian eigenbasis.
    """
    c = centered(x)
    return float(c @ c)


def realize_signal(sig: SignalSpec, n: int, spec: Spectrum | None, seed) -> np.ndarray:
    """Draw (or fetch) a ground-truth signal for one realization."""
    if isinstance(sig, DeterministicSignal):
        x = np.asarray(sig.values, dtype=np.float64)
        if x.shape != (n,):
            raise DimensionError(f"deterministic signal has shape {x.shape}, expected ({n},)")
        return x
    if isinstance(sig, GaussianSignal):
        s = np.asarray(sig.stddev, dtype=np.float64)
        if s.ndim == 0:
            s = np.full(n, float(s))
        return gaussian_signal(n, sig.mean, s, seed)
    if isinstance(sig, BandLimitedSignal):
        if spec is None:
            raise ValueError("band-limited signals require a Spectrum")
        return band_limited_signal(spec, sig.coeffs)
    raise TypeError(f"unknown signal spec {type(sig).__name__}")


def require_signal_power(p_signal: float) -> float:
    if not (p_signal > 0):
        raise ZeroSignalPowerError("centered signal has zero power")
    return p_signal
