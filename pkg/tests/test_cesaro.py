import math

import numpy as np
import pytest

from cesaronorm import cesaro, specfun
from cesaronorm.errors import DomainError


class TestCoefficients:
    def test_partial_sum_case(self):
        k = cesaro.coefficients(2, 0.0)
        np.testing.assert_array_equal(k.coeffs, [1.0, 1.0, 1.0])

    def test_fejer_case(self):
        k = cesaro.coefficients(2, 1.0)
        np.testing.assert_allclose(k.coeffs, [1.0, 2.0 / 3.0, 1.0 / 3.0], rtol=0)

    def test_half_case(self):
        k = cesaro.coefficients(2, 0.5)
        np.testing.assert_allclose(k.coeffs, [1.0, 4.0 / 5.0, 8.0 / 15.0], rtol=1e-15)

    def test_recurrence_invariant(self):
        for n, alpha in [(10, 0.3), (50, 0.7), (7, 0.5)]:
            c = cesaro.coefficients(n, alpha).coeffs
            for k in range(n):
                assert c[k + 1] * (n - k + alpha) == pytest.approx(c[k] * (n - k), rel=1e-14)

    def test_kernel_shape_invariants(self):
        for n, alpha in [(0, 0.5), (5, 0.0), (5, 0.2), (5, 1.0), (100, 0.9)]:
            c = cesaro.coefficients(n, alpha).coeffs
            assert c[0] == 1.0
            assert np.all(c > 0) and np.all(c <= 1.0)
            if alpha > 0:
                assert np.all(np.diff(c) < 0)
            else:
                assert np.all(c == 1.0)

    def test_monotone_in_alpha(self):
        n = 12
        grid = [0.0, 0.1, 0.3, 0.5, 0.7, 0.9, 1.0]
        kernels = [cesaro.coefficients(n, a).coeffs for a in grid]
        for lo, hi in zip(kernels, kernels[1:]):
            assert np.all(hi[1:] < lo[1:] + 1e-15)

    def test_domain(self):
        with pytest.raises(DomainError):
            cesaro.coefficients(-1, 0.5)
        with pytest.raises(DomainError):
            cesaro.coefficients(3, 1.5)


class TestGammaOracle:
    def test_fejer_case(self):
        k = cesaro.coefficients_gamma(2, 1.0)
        np.testing.assert_allclose(k.coeffs, [1.0, 2.0 / 3.0, 1.0 / 3.0], rtol=1e-13)

    def test_last_coefficient(self):
        # c_n = binom(n+alpha, alpha)^{-1}
        k = cesaro.coefficients_gamma(2, 0.5)
        assert k.coeffs[-1] == pytest.approx(8.0 / 15.0, rel=1e-13)
        assert k.coeffs[-1] == pytest.approx(1.0 / specfun.gen_binom(2.5, 0.5), rel=1e-13)

    def test_matches_recurrence(self):
        for n in [1, 5, 20, 200]:
            for alpha in [0.0, 0.1, 0.3, 0.5, 0.7, 0.9, 1.0]:
                a = cesaro.coefficients(n, alpha).coeffs
                b = cesaro.coefficients_gamma(n, alpha).coeffs
                np.testing.assert_allclose(a, b, rtol=1e-11)


class TestApply:
    def test_truncation(self):
        k = cesaro.coefficients(2, 0.0)
        np.testing.assert_array_equal(cesaro.apply(k, [1, 5, -3, 7]), [1, 5, -3])

    def test_fejer_weights(self):
        k = cesaro.coefficients(2, 1.0)
        np.testing.assert_allclose(cesaro.apply(k, [0, 3, 3]), [0, 2, 1], rtol=1e-15)

    def test_short_input(self):
        k = cesaro.coefficients(5, 0.7)
        np.testing.assert_array_equal(cesaro.apply(k, [4.0]), [4.0])

    def test_complex(self):
        k = cesaro.coefficients(3, 0.5)
        x = np.array([1 + 2j, 0.5j, -1, 2])
        np.testing.assert_allclose(cesaro.apply(k, x), k.coeffs * x)


class TestTailAsymptotic:
    def test_bracket_contains_cn_sq(self):
        for n, alpha in [(10, 0.5), (100, 0.25), (1000, 0.25), (500, 0.9)]:
            lo, hi = cesaro.tail_asymptotic_cn(n, alpha)
            cn_sq = cesaro.coefficients(n, alpha).coeffs[-1] ** 2
            assert lo < cn_sq < hi

    def test_bracket_narrow_at_large_n(self):
        lo, hi = cesaro.tail_asymptotic_cn(1000, 0.25)
        assert (hi - lo) / ((hi + lo) / 2) < 0.003

    def test_asymptotic_constant(self):
        alpha = 0.3
        limit = math.exp(2 * specfun.log_gamma(alpha + 1.0))
        for n in [10**3, 10**5]:
            cn_sq = cesaro.coefficients(n, alpha).coeffs[-1] ** 2
            assert cn_sq * n ** (2 * alpha) == pytest.approx(limit, rel=5.0 / n)

    def test_domain(self):
        with pytest.raises(DomainError):
            cesaro.tail_asymptotic_cn(0, 0.5)
        with pytest.raises(DomainError):
            cesaro.tail_asymptotic_cn(10, 1.0)
