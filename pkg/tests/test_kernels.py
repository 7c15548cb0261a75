import numpy as np
import pytest

from conftest import mixed_graphs
from lapreg import laplacian
from lapreg._kernels import BACKEND, _pykernels

try:
    from lapreg._kernels import _cykernels
except ImportError:
    _cykernels = None

needs_compiled = pytest.mark.skipif(_cykernels is None, reason="compiled kernels unavailable")


def _curve_inputs(seed=0, n=64, t=300):
    rng = np.random.default_rng(seed)
    lam = np.sort(rng.uniform(0, 30, size=n))
    lam[0] = 0.0
    csq = rng.uniform(0, 4, size=n)
    csq[0] = 0.0
    gsq = rng.uniform(0.1, 2, size=n)
    alphas = np.concatenate(([0.0], np.logspace(-6, 6, t - 1)))
    return lam, csq, gsq, alphas


def test_backend_reported():
    assert BACKEND in ("cython", "python")


@needs_compiled
def test_decomposition_curves_parity():
    lam, csq, gsq, alphas = _curve_inputs()
    b_py, v_py = _pykernels.decomposition_curves(lam, csq, gsq, alphas)
    b_cy, v_cy = _cykernels.decomposition_curves(lam, csq, gsq, alphas)
    np.testing.assert_allclose(b_cy, b_py, rtol=1e-12, atol=1e-300)
    np.testing.assert_allclose(v_cy, v_py, rtol=1e-12)


@needs_compiled
def test_envelope_curve_parity_and_alpha_zero():
    alphas = np.concatenate(([0.0], np.logspace(-8, 8, 200)))
    args = (alphas, 1.7, 23.0, 99.0, 24.75, 0.25)
    out_py = _pykernels.envelope_curve(*args)
    out_cy = _cykernels.envelope_curve(*args)
    np.testing.assert_array_equal(out_cy, out_py)
    assert np.all(np.isfinite(out_py))
    assert out_py[0] == 24.75 + 0.25


@needs_compiled
def test_edge_kernels_parity():
    rng = np.random.default_rng(1)
    for g in mixed_graphs(4, seed=20):
        lap = laplacian(g)
        x = rng.standard_normal(g.n)
        qf_py = _pykernels.edge_quadratic_form(g.src, g.dst, g.weight, x)
        qf_cy = _cykernels.edge_quadratic_form(g.src, g.dst, g.weight, x)
        assert qf_cy == pytest.approx(qf_py, rel=1e-12)
        out_py = np.empty(g.n)
        out_cy = np.empty(g.n)
        _pykernels.laplacian_matvec(g.src, g.dst, g.weight, lap.degrees, x, out_py)
        _cykernels.laplacian_matvec(g.src, g.dst, g.weight, lap.degrees, x, out_cy)
        np.testing.assert_allclose(out_cy, out_py, rtol=1e-12, atol=1e-12)


def test_matvec_matches_dense():
    rng = np.random.default_rng(2)
    for g in mixed_graphs(3, seed=21):
        lap = laplacian(g)
        x = rng.standard_normal(g.n)
        out = np.empty(g.n)
        _pykernels.laplacian_matvec(g.src, g.dst, g.weight, lap.degrees, x, out)
        np.testing.assert_allclose(out, lap.toarray() @ x, rtol=1e-12, atol=1e-12)


def test_decomposition_matches_scalar_path():
    # grid kernel values must agree with the pointwise operations
    from lapreg import NoiseModel, gaussian_signal, mse_decomposition, mse_curve, spectrum

    g = mixed_graphs(1, seed=22)[0]
    spec = spectrum(laplacian(g))
    x = gaussian_signal(g.n, 10.0, np.ones(g.n), seed=0)
    nm = NoiseModel.isotropic(g.n, 0.8)
    curve = mse_curve(spec, x, nm)
    for alpha in (0.0, 1e-4, 0.3, 12.0, 1e7):
        assert curve(alpha) == pytest.approx(
            mse_decomposition(alpha, spec, x, nm).mse, rel=1e-12
        )


def test_mismatched_lengths_rejected():
    lam, csq, gsq, alphas = _curve_inputs(n=8)
    with pytest.raises(ValueError):
        _pykernels.decomposition_curves(lam, csq[:-1], gsq, alphas)
    if _cykernels is not None:
        with pytest.raises(ValueError):
            _cykernels.decomposition_curves(lam, csq[:-1], gsq, alphas)
