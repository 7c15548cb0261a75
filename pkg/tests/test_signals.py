import numpy as np
import pytest

from conftest import mixed_graphs, p2, spectrum_of
from lapreg import (
    NoiseModel,
    average_samples,
    band_limited_signal,
    centered,
    gaussian_signal,
    observe,
    signal_power,
)
from lapreg.errors import DimensionError


class TestNoiseModel:
    def test_rejects_negative_sigma(self):
        with pytest.raises(ValueError):
            NoiseModel(sigma=np.array([1.0, -0.1]))

    def test_rejects_all_zero(self):
        with pytest.raises(ValueError):
            NoiseModel(sigma=np.zeros(3))

    def test_summaries(self):
        nm = NoiseModel(sigma=np.array([3.0, 1.0, 2.0]))
        assert nm.max_variance == 9.0
        assert nm.tail_variance_sum == 5.0
        np.testing.assert_array_equal(nm.variances, [9.0, 1.0, 4.0])

    def test_isotropic(self):
        nm = NoiseModel.isotropic(4, 0.5)
        np.testing.assert_array_equal(nm.sigma, [0.5] * 4)


class TestGaussianSignal:
    def test_zero_stddev_is_exact_mean(self):
        x = gaussian_signal(6, 10.0, np.zeros(6), seed=0)
        np.testing.assert_array_equal(x, np.full(6, 10.0))

    def test_sample_mean(self):
        # standard error 1/sqrt(1e4) = 0.01
        x = gaussian_signal(10_000, 10.0, np.ones(10_000), seed=123)
        assert abs(x.mean() - 10.0) < 0.05

    def test_deterministic(self):
        a = gaussian_signal(50, 0.0, np.ones(50), seed=7)
        b = gaussian_signal(50, 0.0, np.ones(50), seed=7)
        np.testing.assert_array_equal(a, b)

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionError):
            gaussian_signal(5, 0.0, np.ones(4), seed=0)


class TestBandLimitedSignal:
    def test_constant_basis(self):
        spec = spectrum_of(mixed_graphs(1, seed=0)[0])
        x = band_limited_signal(spec, [(1, 3.0)])
        np.testing.assert_allclose(x, 3.0 / np.sqrt(spec.n), atol=1e-12)

    def test_empty_active_set(self):
        spec = spectrum_of(p2())
        with pytest.raises(ValueError):
            band_limited_signal(spec, [])

    def test_p2_second_mode(self):
        # v2 = (1, -1)/sqrt(2) up to sign; the sign convention makes the
        # largest-magnitude entry positive, so sqrt(2) * v2 = (1, -1).
        spec = spectrum_of(p2())
        x = band_limited_signal(spec, [(2, np.sqrt(2.0))])
        np.testing.assert_allclose(np.sort(x), [-1.0, 1.0], atol=1e-12)

    def test_index_out_of_range(self):
        spec = spectrum_of(p2())
        with pytest.raises(IndexError):
            band_limited_signal(spec, [(3, 1.0)])
        with pytest.raises(IndexError):
            band_limited_signal(spec, [(0, 1.0)])

    def test_duplicate_and_zero_weight(self):
        spec = spectrum_of(p2())
        with pytest.raises(ValueError):
            band_limited_signal(spec, [(2, 1.0), (2, 2.0)])
        with pytest.raises(ValueError):
            band_limited_signal(spec, [(2, 0.0)])

    def test_coefficient_recovery(self):
        spec = spectrum_of(mixed_graphs(2, seed=1)[0])
        x = band_limited_signal(spec, [(2, 1.5), (4, -0.5)])
        coeffs = spec.eigenvectors.T @ x
        assert coeffs[1] == pytest.approx(1.5, abs=1e-10)
        assert coeffs[3] == pytest.approx(-0.5, abs=1e-10)
        others = np.delete(coeffs, [1, 3])
        assert np.abs(others).max() < 1e-10


class TestObserve:
    def test_deterministic(self):
        nm = NoiseModel.isotropic(20, 2.0)
        x = np.linspace(0, 1, 20)
        np.testing.assert_array_equal(observe(x, nm, seed=5), observe(x, nm, seed=5))

    def test_noiseless_limit(self):
        eps = 1e-12
        nm = NoiseModel.isotropic(8, eps)
        x = np.arange(8.0)
        np.testing.assert_allclose(observe(x, nm, seed=1), x, atol=1e-10)

    def test_empirical_covariance(self):
        sigma = np.array([1.0, 0.5, 2.0, 1.5, 0.8])
        nm = NoiseModel(sigma=sigma)
        x = np.zeros(5)
        draws = np.stack([observe(x, nm, seed=r) for r in range(100_000)])
        cov = np.cov(draws.T)
        np.testing.assert_allclose(np.diag(cov), sigma**2, rtol=0.02)
        off = cov - np.diag(np.diag(cov))
        bound = 0.02 * np.outer(sigma, sigma)
        assert np.all(np.abs(off) <= bound)

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionError):
            observe(np.zeros(3), NoiseModel.isotropic(4, 1.0), seed=0)


class TestAveraging:
    def test_single_sample_identity(self):
        y = np.array([1.0, 2.0])
        np.testing.assert_array_equal(average_samples([y]), y)

    def test_two_vectors(self):
        np.testing.assert_array_equal(
            average_samples([np.array([0.0, 2.0]), np.array([2.0, 0.0])]), [1.0, 1.0]
        )

    def test_idempotent_on_copies(self):
        y = np.array([3.0, -1.0, 4.0])
        np.testing.assert_array_equal(average_samples([y] * 7), y)

    def test_errors(self):
        with pytest.raises(ValueError):
            average_samples([])
        with pytest.raises(DimensionError):
            average_samples([np.zeros(2), np.zeros(3)])


class TestCenteringAndPower:
    def test_centering_examples(self):
        np.testing.assert_array_equal(centered(np.full(5, 9.0)), np.zeros(5))
        np.testing.assert_array_equal(centered(np.array([1.0, -1.0])), [1.0, -1.0])
        np.testing.assert_array_equal(centered(np.array([3.0, 1.0])), [1.0, -1.0])

    def test_centering_sums_to_zero(self):
        rng = np.random.default_rng(3)
        x = rng.uniform(-100, 100, size=257)
        assert abs(centered(x).sum()) <= 1e-12 * 257 * np.abs(x).max()

    def test_power_examples(self):
        assert signal_power(np.full(9, 4.0)) == 0.0
        assert signal_power(np.array([1.0, -1.0])) == 2.0

    def test_power_is_shift_invariant(self):
        rng = np.random.default_rng(4)
        x = rng.standard_normal(40)
        for c in (-3.0, 0.25, 1e3):
            assert signal_power(x + c) == pytest.approx(signal_power(x), rel=1e-9)

    def test_parseval_identity(self):
        rng = np.random.default_rng(5)
        for g in mixed_graphs(3, seed=12):
            spec = spectrum_of(g)
            x = rng.standard_normal(g.n)
            coeffs = spec.eigenvectors.T @ x
            spectral = float(np.sum(coeffs[1:] ** 2))
            assert signal_power(x) == pytest.approx(spectral, rel=1e-11, abs=1e-11)

    def test_p2_single_coefficient(self):
        spec = spectrum_of(p2())
        rng = np.random.default_rng(6)
        x = rng.standard_normal(2)
        v2 = spec.eigenvectors[:, 1]
        assert signal_power(x) == pytest.approx(float(v2 @ x) ** 2, rel=1e-12)

    def test_constant_mode_orthogonal_to_centering(self):
        for g in mixed_graphs(2, seed=13):
            spec = spectrum_of(g)
            x = np.random.default_rng(7).standard_normal(g.n)
            assert abs(spec.eigenvectors[:, 0] @ centered(x)) <= 1e-12 * max(1, np.abs(x).max())
