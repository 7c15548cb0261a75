import numpy as np
import pytest

import lapreg.filtering as filtering
from conftest import mixed_graphs, p2, spectrum_of
from lapreg import (
    complete_graph,
    denoise_direct,
    denoise_spectral,
    erdos_renyi,
    filter_gains,
    laplacian,
    quadratic_form,
    watts_strogatz,
)
from lapreg.errors import DimensionError


class TestFilterGains:
    def test_alpha_zero_identity(self):
        spec = spectrum_of(mixed_graphs(1, seed=0)[0])
        gains = filter_gains(spec, 0.0)
        np.testing.assert_array_equal(gains.h, np.ones(spec.n))
        np.testing.assert_array_equal(gains.q, np.zeros(spec.n))

    def test_p2_half(self):
        gains = filter_gains(spectrum_of(p2()), 0.5)
        np.testing.assert_allclose(gains.h, [1.0, 0.5], atol=1e-14)

    def test_complete_graph_tail(self):
        spec = spectrum_of(complete_graph(15, 1.0))
        for alpha in (0.01, 1.0, 50.0):
            gains = filter_gains(spec, alpha)
            np.testing.assert_allclose(gains.h[1:], 1.0 / (1.0 + alpha * 15), rtol=1e-12)

    def test_structural_invariants(self):
        for g in mixed_graphs(3, seed=1):
            spec = spectrum_of(g)
            for alpha in (0.0, 0.3, 7.0, 1e8):
                gains = filter_gains(spec, alpha)
                assert gains.h[0] == 1.0
                assert gains.q[0] == 0.0
                assert np.all(gains.h > 0) and np.all(gains.h <= 1)
                assert np.all(np.diff(gains.h) <= 0)
                # complements hold exactly, not just approximately
                np.testing.assert_array_equal(gains.h + gains.q, np.ones(spec.n))

    def test_negative_alpha(self):
        with pytest.raises(ValueError):
            filter_gains(spectrum_of(p2()), -0.1)


class TestDenoise:
    def test_constant_passthrough(self):
        g = mixed_graphs(1, seed=2)[0]
        spec = spectrum_of(g)
        y = np.full(g.n, 4.2)
        for alpha in (0.0, 1.0, 1e6):
            np.testing.assert_allclose(denoise_spectral(y, spec, alpha), y, rtol=1e-12)
            # the direct solve carries the system's conditioning in its error
            np.testing.assert_allclose(denoise_direct(y, laplacian(g), alpha), y, rtol=1e-8)

    def test_alpha_zero_identity(self):
        g = mixed_graphs(1, seed=3)[0]
        y = np.random.default_rng(0).standard_normal(g.n)
        np.testing.assert_array_equal(denoise_spectral(y, spectrum_of(g), 0.0), y)
        np.testing.assert_array_equal(denoise_direct(y, laplacian(g), 0.0), y)

    def test_p2_hand_value(self):
        # expand (1,0) in v1, v2 and attenuate the second mode by 1/2
        y = np.array([1.0, 0.0])
        expected = [0.75, 0.25]
        np.testing.assert_allclose(denoise_spectral(y, spectrum_of(p2()), 0.5), expected)
        np.testing.assert_allclose(denoise_direct(y, laplacian(p2()), 0.5), expected)

    def test_routes_agree(self):
        rng = np.random.default_rng(1)
        for k, g in enumerate(mixed_graphs(8, seed=4)):
            spec = spectrum_of(g)
            lap = laplacian(g)
            y = rng.standard_normal(g.n) * 10
            alpha = float(10.0 ** rng.uniform(-3, 3))
            a = denoise_spectral(y, spec, alpha)
            b = denoise_direct(y, lap, alpha)
            assert np.linalg.norm(a - b) <= 1e-8 * np.linalg.norm(a)

    def test_smoothing_never_increases_roughness(self):
        rng = np.random.default_rng(2)
        for g in mixed_graphs(4, seed=5):
            y = rng.standard_normal(g.n)
            spec = spectrum_of(g)
            for alpha in (0.0, 0.1, 1.0, 100.0):
                xhat = denoise_spectral(y, spec, alpha)
                assert quadratic_form(xhat, g) <= quadratic_form(y, g) + 1e-12

    def test_mean_preserved(self):
        rng = np.random.default_rng(3)
        for g in mixed_graphs(4, seed=6):
            y = rng.standard_normal(g.n) + 5.0
            xhat = denoise_spectral(y, spectrum_of(g), 3.0)
            assert xhat.sum() == pytest.approx(y.sum(), rel=1e-10)

    def test_large_alpha_limit_is_mean(self):
        g = erdos_renyi(50, 0.3, seed=0)
        rng = np.random.default_rng(4)
        y = rng.standard_normal(50) + 10.0
        target = np.full(50, y.mean())
        for xhat in (
            denoise_spectral(y, spectrum_of(g), 1e8),
            denoise_direct(y, laplacian(g), 1e8),
        ):
            assert np.linalg.norm(xhat - target) <= 1e-6 * np.linalg.norm(target)

    def test_minimizes_the_regularized_objective(self):
        rng = np.random.default_rng(5)
        g = mixed_graphs(1, seed=7)[0]
        spec = spectrum_of(g)
        y = rng.standard_normal(g.n)
        for alpha in (0.1, 1.0, 10.0):
            xhat = denoise_spectral(y, spec, alpha)

            def objective(x):
                return float(np.sum((y - x) ** 2)) + alpha * quadratic_form(x, g)

            base = objective(xhat)
            for _ in range(20):
                delta = rng.standard_normal(g.n)
                delta *= 1e-3 / np.linalg.norm(delta)
                assert objective(xhat + delta) >= base

    def test_dimension_mismatch(self):
        g = p2()
        with pytest.raises(DimensionError):
            denoise_spectral(np.ones(3), spectrum_of(g), 1.0)
        with pytest.raises(DimensionError):
            denoise_direct(np.ones(3), laplacian(g), 1.0)


class TestConjugateGradientPath:
    def test_forced_cg_matches_spectral(self, monkeypatch):
        monkeypatch.setattr(filtering, "_DENSE_LIMIT", 10)
        g = watts_strogatz(300, 6, 0.2, seed=1)
        y = np.random.default_rng(6).standard_normal(300) * 3 + 7
        for alpha in (0.05, 2.0, 50.0):
            a = denoise_direct(y, laplacian(g), alpha)
            b = denoise_spectral(y, spectrum_of(g), alpha)
            assert np.linalg.norm(a - b) <= 1e-8 * np.linalg.norm(b)

    def test_large_sparse_residual_contract(self):
        g = watts_strogatz(2500, 6, 0.1, seed=2)
        lap = laplacian(g)
        y = np.random.default_rng(7).standard_normal(2500)
        alpha = 5.0
        xhat = denoise_direct(y, lap, alpha)
        resid = np.linalg.norm(xhat + alpha * lap.matvec(xhat) - y)
        assert resid <= 1e-10 * np.linalg.norm(y)
