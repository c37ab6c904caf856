"""
Unit Tests for gamma-function building blocks
"""

import math

import pytest
from scipy import special

from erws.config import override_settings
from erws.errors import DomainError
from erws.exact import gamma_ratio, harmonic_number, rgamma, scaled_ratio


def lgamma_ratio(t, alpha):
    return math.exp(math.lgamma(t + alpha) - math.lgamma(t))


class TestGammaRatio:
    """Γ(t+α)/Γ(t) 테스트"""

    @pytest.mark.parametrize("t", [1, 2, 5, 31])
    @pytest.mark.parametrize("alpha", [0.5, -0.3, 0.7, 1.02])
    def test_small_t_matches_lgamma(self, t, alpha):
        """작은 t는 poch 경로"""
        assert gamma_ratio(t, alpha) == pytest.approx(lgamma_ratio(t, alpha), rel=1e-12)

    @pytest.mark.parametrize("t", [32, 100, 5000])
    @pytest.mark.parametrize("alpha", [0.6, 0.7, -0.3, 1.02])
    def test_asymptotic_branch_matches_poch(self, t, alpha):
        """큰 t의 Stirling 경로는 poch와 일치"""
        assert gamma_ratio(t, alpha) == pytest.approx(float(special.poch(t, alpha)), rel=1e-10)

    def test_huge_t_has_power_law_scale(self):
        """t = 1e12에서 Γ(t+α)/Γ(t) ≈ t^α"""
        t = 10**12
        assert gamma_ratio(t, 0.7) == pytest.approx(t**0.7, rel=1e-9)

    def test_integer_alpha_is_exact(self):
        """정수 α는 곱으로 정확히"""
        assert gamma_ratio(4, 2) == 20.0
        assert gamma_ratio(3, -2) == 0.5
        assert gamma_ratio(7, 0) == 1.0

    def test_threshold_from_settings(self):
        """점근 경로 시작점은 설정에서 읽음"""
        with override_settings(gamma_ratio_asymptotic_from=8):
            value = gamma_ratio(10, 0.5)
        assert value == pytest.approx(lgamma_ratio(10, 0.5), rel=1e-12)

    def test_domain_errors(self):
        """t가 양의 정수가 아니거나 t + α <= 0"""
        with pytest.raises(DomainError):
            gamma_ratio(0, 0.5)
        with pytest.raises(DomainError):
            gamma_ratio(1.5, 0.5)
        with pytest.raises(DomainError):
            gamma_ratio(2, -2.5)


class TestScaledRatio:
    """Γ(t+a)/(Γ(a)Γ(t)) 테스트"""

    def test_positive_a(self):
        """Γ(3.5)/(Γ(0.5)Γ(3)) = 2.5·1.5·0.5/2"""
        assert scaled_ratio(3, 0.5) == pytest.approx(0.9375, rel=1e-14)

    def test_past_the_pole(self):
        """t + a <= 0이면 상승 계승 곱"""
        assert scaled_ratio(2, -3.0) == pytest.approx(6.0)
        assert scaled_ratio(3, -3.0) == pytest.approx(-3.0)

    def test_nonpositive_integer_a_vanishes(self):
        """a = 0이면 1/Γ(a) = 0"""
        assert scaled_ratio(5, 0.0) == 0.0

    def test_rgamma_poles(self):
        """1/Γ는 극에서 0"""
        assert rgamma(-2.0) == 0.0
        assert rgamma(1.0) == 1.0


class TestHarmonicNumber:
    """조화수 테스트"""

    def test_small_values(self):
        """H_1 = 1, H_4 = 25/12"""
        assert harmonic_number(1) == 1.0
        assert harmonic_number(4) == pytest.approx(25 / 12, rel=1e-15)

    def test_asymptotic_series_above_limit(self):
        """합산 상한 위에서는 점근 급수"""
        exact = harmonic_number(1000)
        with override_settings(harmonic_pairwise_limit=10):
            series = harmonic_number(1000)
        assert series == pytest.approx(exact, rel=1e-14)
