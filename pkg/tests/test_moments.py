"""
Unit Tests for closed-form moments
"""

import math

import pytest

from erws.errors import RangeError, ResonanceFallback, ValidationError
from erws.exact import (
    Method,
    MomentConstants,
    ResonanceGuard,
    baseline_second_moment,
    first_moment,
    first_moment_2d,
    first_moment_2d_formula,
    first_moment_asymptotic,
    moment_table,
    second_moment_2d,
    second_moment_curve,
    second_moment_exact,
    second_moment_formula,
    sigma2_exact,
)
from erws.model import Params1D, Params2D
from erws.oracle import iterate_baseline, iterate_recurrences, iterate_recurrences_2d


class TestSigma2:
    """⟨σ_t²⟩ 닫힌 형식 테스트"""

    def test_initial_condition(self, params_1d):
        """⟨σ_1²⟩ = 1"""
        assert sigma2_exact(params_1d, 1) == 1.0

    def test_small_t_values(self, params_1d):
        """σ²(2) = 0.8, σ²(3) = 0.73"""
        assert sigma2_exact(params_1d, 2) == pytest.approx(0.8, rel=1e-12)
        assert sigma2_exact(params_1d, 3) == pytest.approx(0.73, rel=1e-12)

    def test_limit_is_restart_fraction(self, params_1d):
        """t → ∞에서 ε/(ε+r)"""
        assert sigma2_exact(params_1d, 10**9) == pytest.approx(1 / 3, abs=2e-3)

    def test_resonant_denominator_falls_back(self):
        """ε + r = 1이면 점화식으로 대체 (상수 ε)"""
        params = Params1D.from_gamma(eps=0.1, r=0.9, gamma=0.05)

        with pytest.warns(ResonanceFallback):
            value = sigma2_exact(params, 5)
        assert value == pytest.approx(0.1, rel=1e-12)


class TestSecondMoment:
    """⟨X_t²⟩ 닫힌 형식 테스트"""

    def test_small_t_values(self, params_1d):
        """m2 = 1, 2.4, 3.85"""
        values = [second_moment_exact(params_1d, t) for t in (1, 2, 3)]

        assert values == pytest.approx([1.0, 2.4, 3.85], rel=1e-12)

    def test_half_gamma_branch(self):
        """γ = 1/2, t = 2에서 2.8"""
        params = Params1D.from_gamma(eps=0.1, r=0.2, gamma=0.5)

        assert second_moment_exact(params, 2) == pytest.approx(2.8, rel=1e-12)

    def test_half_gamma_constant_fixes_initial_condition(self):
        """γ = 1/2의 상수 D = r/(ε+r)²"""
        assert MomentConstants.d_constant(0.1, 0.2, 0.5) == pytest.approx(0.2 / 0.09)

    @pytest.mark.parametrize(
        "eps, r, gamma",
        [
            (0.1, 0.2, 0.3),
            (0.1, 0.2, 0.49),
            (0.1, 0.2, 0.5),
            (0.1, 0.2, 0.51),
            (0.3, 0.4, -0.2),
            (0.05, 0.1, 0.8),
            (0.2, 0.3, -0.6),
        ],
    )
    def test_matches_recurrence(self, eps, r, gamma):
        """닫힌 형식 = 점화식 반복 (t = 1000까지)"""
        params = Params1D.from_gamma(eps=eps, r=r, gamma=gamma)
        checkpoints = [1, 2, 3, 10, 31, 32, 33, 100, 1000]
        table = iterate_recurrences(params, 1000, checkpoints)

        closed = [second_moment_exact(params, t) for t in checkpoints]
        assert closed == pytest.approx(table.m2, rel=1e-10)

    def test_independent_of_initial_bias(self):
        """⟨X²⟩는 s와 무관"""
        symmetric = Params1D.from_gamma(eps=0.1, r=0.2, gamma=0.3, s=0.5)
        biased = Params1D.from_gamma(eps=0.1, r=0.2, gamma=0.3, s=0.9)

        assert second_moment_exact(symmetric, 50) == second_moment_exact(biased, 50)

    def test_resonant_memory_denominator(self):
        """1 - ε - r - 2γ = 0이면 경고 후 점화식 값"""
        params = Params1D.from_gamma(eps=0.1, r=0.2, gamma=0.35)
        expected = iterate_recurrences(params, 200, [200]).m2[0]

        with pytest.warns(ResonanceFallback):
            value = second_moment_exact(params, 200)
        assert value == pytest.approx(expected, rel=1e-14)

    def test_formula_accepts_tiny_eps(self):
        """커널은 Params1D 밖의 ε도 평가"""
        tiny = second_moment_formula(1e-12, 0.2, 0.3, 100)
        baseline = baseline_second_moment(0.3, 0.2, 100)

        assert tiny == pytest.approx(baseline, rel=1e-9)


class TestBaseline:
    """ε = 0 기준 모델 테스트"""

    def test_matches_recurrence(self):
        """기준 닫힌 형식 = 점화식"""
        table = iterate_baseline(0.3, 0.2, [1, 2, 50, 500])
        values = [baseline_second_moment(0.3, 0.2, t) for t in (1, 2, 50, 500)]

        assert values == pytest.approx(table.m2, rel=1e-10)

    def test_second_step(self):
        """⟨X_2²⟩ = 1 + 2γ + (1 - r)"""
        assert baseline_second_moment(0.3, 0.2, 2) == pytest.approx(2.4, rel=1e-12)

    def test_resonance_falls_back(self):
        """2γ + r = 1에서 점화식"""
        expected = iterate_baseline(0.4, 0.2, [300]).m2[0]

        with pytest.warns(ResonanceFallback):
            value = baseline_second_moment(0.4, 0.2, 300)
        assert value == pytest.approx(expected, rel=1e-14)

    def test_range_errors(self):
        """r ∉ (0, 1) 또는 |γ| >= 1"""
        with pytest.raises(RangeError) as exc_info:
            baseline_second_moment(1.0, 0.0, 5)

        assert {err["field"] for err in exc_info.value.errors} == {"r", "gamma"}

    def test_curve_dispatches_on_eps(self):
        """second_moment_curve: ε = 0이면 기준 모델"""
        assert second_moment_curve(0.0, 0.2, 0.3, [2]) == pytest.approx([2.4])
        assert second_moment_curve(0.1, 0.2, 0.3, [3]) == pytest.approx([3.85])


class TestFirstMoment:
    """평균 변위 테스트"""

    def test_symmetric_start_has_zero_mean(self, params_1d):
        """s = 1/2이면 0"""
        assert first_moment(params_1d, 100) == 0.0

    def test_biased_start(self):
        """⟨X_2⟩ = (2s-1)(1+γ)"""
        params = Params1D.from_gamma(eps=0.1, r=0.2, gamma=0.3, s=0.7)

        assert first_moment(params, 2) == pytest.approx(0.4 * 1.3, rel=1e-12)

    def test_matches_recurrence(self):
        """닫힌 형식 = 점화식"""
        params = Params1D.from_gamma(eps=0.1, r=0.2, gamma=-0.4, s=0.8)
        table = iterate_recurrences(params, 500, [7, 500])

        assert [first_moment(params, t) for t in (7, 500)] == pytest.approx(table.m1, rel=1e-10)

    def test_asymptotic_form(self):
        """⟨X_t⟩ ~ (2s-1)/Γ(1+γ) t^γ"""
        params = Params1D.from_gamma(eps=0.1, r=0.2, gamma=0.3, s=0.7)
        coefficient, exponent = first_moment_asymptotic(params)

        assert exponent == 0.3
        assert coefficient == pytest.approx(0.4 / math.gamma(1.3))


class TestTwoDimensional:
    """2D 모멘트 테스트"""

    def test_second_moment_ignores_rotation_bias(self):
        """⟨|X_t|²⟩는 γ'와 무관하고 1D 값과 같음"""
        plain = Params2D.from_gamma(eps=0.1, r=0.2, gamma=0.3, gammap=0.0)
        rotated = Params2D.from_gamma(eps=0.1, r=0.2, gamma=0.3, gammap=0.1)

        assert second_moment_2d(plain, 2) == pytest.approx(2.4, rel=1e-12)
        assert second_moment_2d(rotated, 3) == second_moment_2d(plain, 3)

    def test_first_moment_one_step(self):
        """⟨X_2⟩ = (I + γ + γ'A)⟨X_1⟩"""
        params = Params2D.from_gamma(
            eps=0.1, r=0.2, gamma=0.3, gammap=0.1, initial=(0.4, 0.3, 0.2, 0.1)
        )
        mx, my = first_moment_2d(params, 2)

        # ⟨X_1⟩ = (0.2, 0.2), A(0.2, 0.2) = (-0.2, 0.2)
        assert mx == pytest.approx(1.3 * 0.2 - 0.1 * 0.2)
        assert my == pytest.approx(1.3 * 0.2 + 0.1 * 0.2)

    def test_first_moment_matches_recurrence(self):
        """직접 반복 = 점화식 반복"""
        params = Params2D.from_gamma(
            eps=0.1, r=0.2, gamma=0.3, gammap=0.15, initial=(0.4, 0.3, 0.2, 0.1)
        )
        table = iterate_recurrences_2d(params, 64, [64])

        assert first_moment_2d(params, 64) == table.m1[0]

    def test_pure_rotation_kernel(self):
        """γ = 0이면 크기는 Π|1 + iγ'/k|배"""
        mx, my = first_moment_2d_formula(0.0, 0.5, complex(1.0, 0.0), 2)

        assert (mx, my) == pytest.approx((1.0, 0.5))


class TestMomentTable:
    """체크포인트 표 테스트"""

    def test_closed_form_table(self, params_1d):
        """체크포인트는 정렬/중복 제거"""
        table, method = moment_table(params_1d, [3, 1, 2, 3])

        assert method is Method.CLOSED_FORM
        assert table.t_values == [1, 2, 3]
        assert table.m2 == pytest.approx([1.0, 2.4, 3.85])
        assert table.row(2)[0] == pytest.approx(0.8)

    def test_resonant_table_uses_recurrence(self):
        """공명 시 점화식을 한 번 진행"""
        params = Params1D.from_gamma(eps=0.1, r=0.2, gamma=0.35)

        with pytest.warns(ResonanceFallback):
            table, method = moment_table(params, [1, 10, 100])
        assert method is Method.RECURRENCE
        assert len(table) == 3

    def test_invalid_checkpoints(self, params_1d):
        """0 이하 체크포인트는 ValidationError"""
        with pytest.raises(ValidationError):
            moment_table(params_1d, [0, 5])


class TestResonanceGuard:
    """공명 분모 탐지 테스트"""

    def test_half_gamma_is_not_resonant(self):
        """γ = 1/2는 별도 분기"""
        assert ResonanceGuard.second_moment_denominators(0.1, 0.2, 0.5) == []

    def test_named_denominators(self):
        """공명 분모 이름"""
        assert ResonanceGuard.second_moment_denominators(0.1, 0.2, 0.35) == ["1-eps-r-2gamma"]
        assert ResonanceGuard.baseline_denominators(0.4, 0.2) == ["2gamma+r-1"]


class TestMomentBounds:
    """⟨σ²⟩ 범위와 단조성, ⟨X²⟩ 양수와 증가"""

    @pytest.mark.parametrize("eps,r", [(0.1, 0.2), (0.3, 0.4), (0.05, 0.6), (0.5, 0.05)])
    def test_sigma2_bounds_and_monotone(self, eps, r):
        """⟨σ_t²⟩ ∈ [ε/(ε+r), 1]이고 ε/(ε+r)로 단조 감소"""
        params = Params1D.from_gamma(eps, r, 0.1)
        limit = eps / (eps + r)
        values = [sigma2_exact(params, t) for t in range(1, 301)]

        assert values[0] == pytest.approx(1.0)
        for value in values:
            assert limit - 1e-12 <= value <= 1.0 + 1e-12
        for earlier, later in zip(values, values[1:]):
            assert later <= earlier + 1e-12
        assert values[-1] - limit < values[1] - limit

    @pytest.mark.parametrize("gamma", [0.0, 0.3, 0.5, 0.7])
    def test_second_moment_grows(self, gamma):
        """γ >= 0: ⟨X_{t+1}²⟩ >= (1 + 2γ/t)⟨X_t²⟩ > 0"""
        params = Params1D.from_gamma(0.1, 0.2, gamma)
        values = [second_moment_exact(params, t) for t in range(1, 301)]

        assert all(value > 0 for value in values)
        for t, (current, following) in enumerate(zip(values, values[1:]), start=1):
            assert following >= current * (1.0 + 2.0 * gamma / t) - 1e-9 * following

    @pytest.mark.parametrize("gamma", [-0.7, -0.3])
    def test_second_moment_positive_for_negative_memory(self, gamma):
        params = Params1D.from_gamma(0.1, 0.2, gamma)

        assert all(second_moment_exact(params, t) > 0 for t in range(1, 301))
