import math

import numpy as np
import pytest

from cesaronorm import bounds, cesaro, hadamard
from cesaronorm.errors import DomainError


class TestDiffEnergy:
    def test_partial_sum_kernel(self):
        s, suffix = bounds.diff_energy(cesaro.coefficients(2, 0.0))
        assert s == 1.0
        np.testing.assert_allclose(suffix, [1.0, 1.0])

    def test_fejer_kernel(self):
        s, suffix = bounds.diff_energy(cesaro.coefficients(2, 1.0))
        assert s == pytest.approx(2.0 / 9.0, rel=1e-15)
        assert suffix[1] == pytest.approx(1.0 / 9.0, rel=1e-15)

    def test_last_suffix_is_cn_sq(self):
        for n, alpha in [(5, 0.3), (40, 0.5), (100, 0.9)]:
            kernel = cesaro.coefficients(n, alpha)
            _, suffix = bounds.diff_energy(kernel)
            assert suffix[-1] == pytest.approx(kernel.coeffs[-1] ** 2, rel=1e-15)

    def test_requires_degree(self):
        with pytest.raises(DomainError):
            bounds.diff_energy(cesaro.coefficients(0, 0.5))


class TestCertificates:
    def test_upper_tight_at_endpoints(self):
        assert bounds.upper_certificate(cesaro.coefficients(2, 0.0)) == pytest.approx(3.0)
        assert bounds.upper_certificate(cesaro.coefficients(2, 1.0)) == pytest.approx(2.0 / 3.0)

    def test_lower_examples(self):
        k = cesaro.coefficients(2, 0.0)
        assert bounds.lower_certificate(k, 2) == pytest.approx(2.0)
        with pytest.raises(DomainError):
            bounds.lower_certificate(k, 3)
        with pytest.raises(DomainError):
            bounds.lower_certificate(k, 0)

    def test_lower_at_n_is_n_cn_sq(self):
        kernel = cesaro.coefficients(12, 0.6)
        value = bounds.lower_certificate(kernel, 12)
        assert value == pytest.approx(12 * kernel.coeffs[-1] ** 2, rel=1e-14)

    def test_best_lower_scan(self):
        value, m = bounds.best_lower(cesaro.coefficients(2, 0.0))
        assert (value, m) == (2.0, 2)

    def test_best_dominates_proof_choice(self):
        for n, alpha in [(50, 0.25), (100, 0.75)]:
            kernel = cesaro.coefficients(n, alpha)
            best, _ = bounds.best_lower(kernel)
            regime = "above" if alpha > 0.5 else "gamma"
            m = bounds.proof_m_choice(n, regime, alpha=alpha)
            assert best >= bounds.lower_certificate(kernel, m) - 1e-15

    def test_sandwich_against_norm(self):
        for n, alpha in [(8, 0.5), (100, 0.25), (64, 0.9), (40, 0.0), (40, 1.0)]:
            kernel = cesaro.coefficients(n, alpha)
            res = hadamard.operator_norm(
                hadamard.from_kernel(kernel), tol=1e-12, max_iter=100000
            )
            best, _ = bounds.best_lower(kernel)
            slack = 1e-9 * max(1.0, res.norm_sq)
            assert best <= res.norm_sq + slack
            assert res.norm_sq <= bounds.upper_certificate(kernel) + slack


class TestClosedForms:
    def test_half_branch_formula(self):
        expected = (math.pi / 4) * (11 / 10.5**2) * (1 + (math.log(9) + 1) / math.pi)
        assert bounds.closed_form_upper(10, 0.5) == pytest.approx(expected, rel=1e-15)

    def test_half_branch_lower_formula(self):
        expected = (math.pi / 4) * (10 / 10.5**2) * (
            1 + (math.log(7) - math.log(2)) / math.pi
        )
        assert bounds.closed_form_lower(10, 0.5, 5) == pytest.approx(expected, rel=1e-15)
        s, suffix = bounds.diff_energy(cesaro.coefficients(10, 0.5))
        assert expected <= suffix[4]

    def test_upper_dominates_energy(self):
        for n in [2, 10, 100, 1000]:
            for alpha in [0.1, 0.25, 0.5, 0.75, 0.9]:
                s, _ = bounds.diff_energy(cesaro.coefficients(n, alpha))
                assert s <= bounds.closed_form_upper(n, alpha)

    def test_upper_gap_moderate(self):
        s, _ = bounds.diff_energy(cesaro.coefficients(100, 0.25))
        cu = bounds.closed_form_upper(100, 0.25)
        assert s <= cu < 1.2 * s

    def test_lower_bounds_suffix_energy(self):
        for n, alpha in [(50, 0.25), (50, 0.5), (50, 0.75)]:
            _, suffix = bounds.diff_energy(cesaro.coefficients(n, alpha))
            for m in [1, 10, 25, 49]:
                assert bounds.closed_form_lower(n, alpha, m) <= suffix[m - 1]

    def test_domain(self):
        with pytest.raises(DomainError):
            bounds.closed_form_upper(1, 0.3)
        with pytest.raises(DomainError):
            bounds.closed_form_upper(10, 0.0)
        with pytest.raises(DomainError):
            bounds.closed_form_lower(10, 0.3, 10)


class TestProofMChoice:
    def test_gamma_regime(self):
        assert bounds.proof_m_choice(100, "gamma", gamma=0.5) == 70

    def test_above_regime(self):
        assert bounds.proof_m_choice(100, "above", alpha=0.75) == 66

    def test_clamped_small_n(self):
        assert bounds.proof_m_choice(7, "half", gamma=0.99) >= 1
        assert bounds.proof_m_choice(2, "above", alpha=0.9) == 1

    def test_bad_regime(self):
        with pytest.raises(DomainError):
            bounds.proof_m_choice(10, "nope")
        with pytest.raises(DomainError):
            bounds.proof_m_choice(10, "gamma", gamma=1.5)


class TestNormBracket:
    def test_fields_consistent(self):
        kernel = cesaro.coefficients(64, 0.3)
        br = bounds.norm_bracket(kernel)
        assert br.lower <= br.upper
        assert br.upper <= br.closed_upper
        assert br.closed_lower <= br.lower + 1e-15

    def test_endpoint_alpha_has_nan_closed_forms(self):
        br = bounds.norm_bracket(cesaro.coefficients(10, 0.0))
        assert math.isnan(br.closed_upper) and math.isnan(br.closed_lower)

    def test_bracket_scales_like_theorem_below_half(self):
        # coarse version of the asymptotic consistency check
        from cesaronorm.specfun import c_alpha_gamma

        n, alpha = 2**12, 0.25
        br = bounds.norm_bracket(cesaro.coefficients(n, alpha))
        scale = c_alpha_gamma(alpha) ** 2 * n ** (1 - 2 * alpha)
        assert 0.5 <= br.lower / scale <= 1.5
        assert 0.5 <= br.upper / scale <= 1.5
