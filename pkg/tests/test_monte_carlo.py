import numpy as np
import pytest

from lapreg import (
    DeterministicSignal,
    GaussianSignal,
    NoiseModel,
    erdos_renyi,
    gaussian_signal,
    laplacian,
    monte_carlo_mse,
    mse_decomposition,
    spectrum,
)


@pytest.fixture(scope="module")
def setting():
    g = erdos_renyi(30, 0.3, seed=0)
    spec = spectrum(laplacian(g))
    x = gaussian_signal(30, 10.0, np.ones(30), seed=1)
    return g, spec, x


def test_noiseless_identity_has_no_error(setting):
    g, spec, x = setting
    nm = NoiseModel.isotropic(30, 1e-12)
    est = monte_carlo_mse(g, spec, DeterministicSignal(values=x), nm, 0.0, 50, seed=2)
    assert est.mean <= 1e-20


def test_same_seed_reproduces(setting):
    g, spec, x = setting
    nm = NoiseModel.isotropic(30, 1.0)
    sig = DeterministicSignal(values=x)
    a = monte_carlo_mse(g, spec, sig, nm, 0.5, 200, seed=3)
    b = monte_carlo_mse(g, spec, sig, nm, 0.5, 200, seed=3)
    assert a == b


def test_tracks_analytic_mse(setting):
    g, spec, x = setting
    nm = NoiseModel.isotropic(30, 1.0)
    est = monte_carlo_mse(g, spec, DeterministicSignal(values=x), nm, 1.0, 3000, seed=4)
    analytic = mse_decomposition(1.0, spec, x, nm).mse
    assert abs(est.mean - analytic) <= 4 * est.stderr


def test_averaging_shrinks_error(setting):
    g, spec, x = setting
    nm = NoiseModel.isotropic(30, 1.0)
    sig = DeterministicSignal(values=x)
    one = monte_carlo_mse(g, spec, sig, nm, 0.3, 2000, seed=5, samples=1)
    four = monte_carlo_mse(g, spec, sig, nm, 0.3, 2000, seed=5, samples=4)
    analytic = mse_decomposition(0.3, spec, x, nm, samples=4).mse
    assert four.mean < one.mean
    assert abs(four.mean - analytic) <= 4 * four.stderr


def test_gaussian_signal_redraw_flag(setting):
    g, spec, _ = setting
    nm = NoiseModel.isotropic(30, 1.0)
    sig = GaussianSignal(mean=10.0, stddev=np.ones(30))
    redraw = monte_carlo_mse(g, spec, sig, nm, 0.5, 100, seed=6)
    fixed = monte_carlo_mse(g, spec, sig, nm, 0.5, 100, seed=6, redraw_signal=False)
    assert redraw.mean != fixed.mean
    again = monte_carlo_mse(g, spec, sig, nm, 0.5, 100, seed=6)
    assert redraw == again


def test_validation(setting):
    g, spec, x = setting
    nm = NoiseModel.isotropic(30, 1.0)
    sig = DeterministicSignal(values=x)
    with pytest.raises(ValueError):
        monte_carlo_mse(g, spec, sig, nm, 1.0, 0, seed=0)
    with pytest.raises(ValueError):
        monte_carlo_mse(g, spec, sig, nm, 1.0, 5, seed=0, samples=0)
