"""
Unit Tests for model parameters and validation
"""

from fractions import Fraction

import pytest

from erws.config import override_settings
from erws.errors import NormalizationError, RangeError, ValidationError
from erws.model import (
    Params1D,
    Params2D,
    Regime,
    RegimeReport,
    rotate,
    validate_params_1d,
    validate_params_2d,
)


class TestRotate:
    """고정 회전 A 테스트"""

    def test_quarter_turn(self):
        """A(1, 0) = (0, 1), A(0, 1) = (-1, 0)"""
        assert rotate((1, 0)) == (0, 1)
        assert rotate((0, 1)) == (-1, 0)

    def test_full_turn_is_identity(self):
        """A^4 = I"""
        assert rotate((3, -2), k=4) == (3, -2)
        assert rotate((3, -2), k=2) == (-3, 2)


class TestValidateParams1D:
    """1D 파라미터 검증 테스트"""

    def test_valid_params(self):
        """정상 파라미터"""
        params = validate_params_1d(0.55, 0.25, 0.2, 0.1, 0.5)

        assert params.gamma == pytest.approx(0.3)
        assert params.total_rate == pytest.approx(0.3)

    def test_normalization_error(self):
        """p + q + r != 1이면 NormalizationError"""
        with pytest.raises(NormalizationError) as exc_info:
            validate_params_1d(0.5, 0.3, 0.3, 0.1, 0.5)

        assert exc_info.value.errors[0]["field"] == "p+q+r"

    def test_range_error_collects_all_fields(self):
        """범위 밖 값은 한 번에 모두 보고"""
        with pytest.raises(RangeError) as exc_info:
            validate_params_1d(0.5, 0.5, 0.0, 1.0, 0.5)

        fields = {err["field"] for err in exc_info.value.errors}
        assert fields == {"r", "eps"}

    def test_s_on_boundary_rejected(self):
        """s는 열린 구간 (0, 1)"""
        with pytest.raises(RangeError):
            validate_params_1d(0.55, 0.25, 0.2, 0.1, 1.0)

    def test_validation_error_to_dict(self):
        """ValidationError 직렬화"""
        with pytest.raises(ValidationError) as exc_info:
            validate_params_1d(0.5, 0.3, 0.3, 0.1, 0.5)

        payload = exc_info.value.to_dict()
        assert payload["error"] == "NormalizationError"
        assert payload["details"][0]["field"] == "p+q+r"

    def test_tolerance_from_settings(self):
        """정규화 허용 오차는 설정에서 읽음"""
        with pytest.raises(NormalizationError):
            validate_params_1d(0.55, 0.25, 0.2 + 1e-9, 0.1, 0.5)

        with override_settings(normalization_tolerance=1e-6):
            params = validate_params_1d(0.55, 0.25, 0.2 + 1e-9, 0.1, 0.5)
        assert params.r == pytest.approx(0.2)


class TestParams1DFromGamma:
    """(ε, r, γ) 생성 테스트"""

    def test_derived_probabilities(self, params_1d):
        """p = (1-r+γ)/2, q = (1-r-γ)/2"""
        assert params_1d.p == pytest.approx(0.55)
        assert params_1d.q == pytest.approx(0.25)
        assert params_1d.gamma == pytest.approx(0.3)

    def test_gamma_hint_is_kept(self):
        """명시한 γ가 p - q와 일치하면 그 값을 그대로 사용"""
        params = Params1D.from_gamma(eps=0.1, r=0.2, gamma=0.3)

        assert params.gamma == 0.3
        assert params.p + params.q + params.r == pytest.approx(1.0)

    def test_out_of_range_gamma(self):
        """q <= 0이 되는 γ는 RangeError"""
        with pytest.raises(RangeError):
            Params1D.from_gamma(eps=0.1, r=0.2, gamma=0.8)

    def test_exact_view_is_normalized(self, params_1d):
        """유리수 보기는 정확히 정규화됨"""
        exact = params_1d.exact()

        assert exact.p + exact.q + exact.r == 1
        assert exact.p == Fraction(11, 20)
        assert exact.eps == Fraction(1, 10)
        assert exact.gamma == Fraction(3, 10)

    def test_params_are_frozen(self, params_1d):
        """생성 후 불변"""
        with pytest.raises(Exception):
            params_1d.p = 0.6


class TestValidateParams2D:
    """2D 파라미터 검증 테스트"""

    def test_valid_params(self, params_2d):
        """γ = p - q, γ' = p' - q'"""
        assert params_2d.gamma == pytest.approx(0.2)
        assert params_2d.gammap == pytest.approx(0.0)
        assert params_2d.initial_law == (0.25, 0.25, 0.25, 0.25)

    def test_initial_law_must_sum_to_one(self):
        """s1..s4 합이 1이 아니면 NormalizationError"""
        with pytest.raises(NormalizationError) as exc_info:
            validate_params_2d(0.3, 0.1, 0.2, 0.2, 0.2, 0.1, 0.3, 0.3, 0.3, 0.3)

        assert exc_info.value.errors[0]["field"] == "s1+s2+s3+s4"

    def test_from_gamma_default_lateral(self):
        """기본 회전 질량은 (1 - r) / 2"""
        params = Params2D.from_gamma(eps=0.1, r=0.2, gamma=0.3, gammap=0.1)

        assert params.pp + params.qp == pytest.approx(0.4)
        assert params.p + params.q == pytest.approx(0.4)
        assert params.gammap == 0.1

    def test_exact_view(self, params_2d):
        """유리수 보기: r과 s4는 나머지로 고정"""
        exact = params_2d.exact()

        assert exact.p + exact.q + exact.pp + exact.qp + exact.r == 1
        assert sum(exact.initial_law) == 1
        assert exact.gamma == Fraction(1, 5)


class TestRegimeReport:
    """RegimeReport 테스트"""

    def test_diffusivity_only_for_diffusive(self):
        """diffusive가 아니면 diffusivity는 None"""
        diffusive = RegimeReport(Regime.DIFFUSIVE, 1.0, 16.5)
        sub = RegimeReport(Regime.SUB_DIFFUSIVE, 0.8, 1.2)

        assert diffusive.diffusivity == 16.5
        assert sub.diffusivity is None

    def test_regime_values(self):
        """CSV에 쓰이는 문자열 값"""
        assert Regime.LOG_ANOMALOUS.value == "log_anomalous"
        assert Regime("super_diffusive") is Regime.SUPER_DIFFUSIVE
