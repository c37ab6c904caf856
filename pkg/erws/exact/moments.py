"""
닫힌 형식 모멘트

실수 입력을 받는 *_formula 커널과, 검증된 파라미터를 받는 공개 함수로 나뉩니다.
커널은 ε = 0이나 ε = 1e-12 같은 Params1D 밖의 값도 평가할 수 있습니다.
"""

import logging
from typing import List, Sequence, Tuple


from erws.errors import RangeError, single_error
from erws.exact.gamma import gamma_ratio, harmonic_number, rgamma, scaled_ratio
from erws.exact.resonance import Method, ResonanceGuard, warn_fallback
from erws.model import Params1D, Params2D
from erws.oracle.recurrence import (
    MomentTable,
    iterate_moment_recurrences,
    iterate_recurrences,
    normalize_checkpoints,
)

logger = logging.getLogger(__name__)


class MomentConstants:
    """⟨σ²⟩, ⟨X²⟩ 닫힌 형식의 상수들"""

    @staticmethod
    def c_constant(eps: float, r: float) -> float:
        """C = r / ((ε+r) Γ(1-ε-r))"""
        total_rate = eps + r
        return r / total_rate * rgamma(1.0 - total_rate)

    @staticmethod
    def linear_coefficient(eps: float, r: float, gamma: float) -> float:
        """ε / ((1-2γ)(ε+r))"""
        return eps / ((1.0 - 2.0 * gamma) * (eps + r))

    @staticmethod
    def stop_coefficient(eps: float, r: float, gamma: float) -> float:
        """C / (1-ε-r-2γ), t^{1-ε-r} 항의 계수"""
        return MomentConstants.c_constant(eps, r) / (1.0 - eps - r - 2.0 * gamma)

    @staticmethod
    def memory_bracket(eps: float, r: float, gamma: float) -> float:
        """ε/((ε+r)(1-2γ)) + r/((ε+r)(1-ε-r-2γ)); D = -bracket / Γ(2γ)"""
        total_rate = eps + r
        return eps / (total_rate * (1.0 - 2.0 * gamma)) + r / (
            total_rate * (1.0 - total_rate - 2.0 * gamma)
        )

    @staticmethod
    def d_constant(eps: float, r: float, gamma: float) -> float:
        """
        t^{2γ} (γ ≠ 1/2) 또는 t (γ = 1/2) 항의 계수 D

        γ = 1/2에서는 초기 조건 ⟨X_1²⟩ = 1이 D = r/(ε+r)²를 강제합니다.
        """
        total_rate = eps + r
        if gamma == 0.5:
            return r / (total_rate * total_rate)
        return -rgamma(2.0 * gamma) * MomentConstants.memory_bracket(eps, r, gamma)


def _recurrence_value(eps: float, r: float, gamma: float, t: int, pick: int) -> float:
    _, sigmas, _, seconds = iterate_moment_recurrences(eps, r, gamma, 0.0, [t])
    return (sigmas, seconds)[pick][0]


def first_moment_formula(s: float, gamma: float, t: int) -> float:
    """⟨X_t⟩ = (2s-1) Γ(t+γ) / (Γ(1+γ) Γ(t))"""
    bias = 2.0 * s - 1.0
    if bias == 0.0:
        return 0.0
    return bias * gamma_ratio(t, gamma) * rgamma(1.0 + gamma)


def first_moment(params: Params1D, t: int) -> float:
    """1D 평균 변위"""
    return first_moment_formula(params.s, params.gamma, t)


def first_moment_asymptotic(params: Params1D) -> Tuple[float, float]:
    """⟨X_t⟩ ~ coefficient · t^exponent 의 (coefficient, exponent)"""
    return (2.0 * params.s - 1.0) * rgamma(1.0 + params.gamma), params.gamma


def sigma2_formula(eps: float, r: float, t: int) -> float:
    """⟨σ_t²⟩ = C Γ(t-ε-r)/Γ(t) + ε/(ε+r)"""
    if t == 1:
        return 1.0
    resonant = ResonanceGuard.sigma2_denominators(eps, r)
    if resonant:
        warn_fallback("sigma2", resonant)
        return _recurrence_value(eps, r, 0.0, t, 0)
    total_rate = eps + r
    return MomentConstants.c_constant(eps, r) * gamma_ratio(t, -total_rate) + (
        eps / total_rate
    )


def sigma2_exact(params: Params1D, t: int) -> float:
    """정지/재출발 점화식의 해 ⟨σ_t²⟩"""
    return sigma2_formula(params.eps, params.r, t)


def second_moment_formula(eps: float, r: float, gamma: float, t: int) -> float:
    """
    ⟨X_t²⟩ 닫힌 형식 (ε ∈ [0, 1)의 실수 입력)

    γ ≠ 1/2:
        A t + C/(1-ε-r-2γ) Γ(t+1-ε-r)/Γ(t) + D Γ(t+2γ)/Γ(t)
    γ = 1/2:
        (ε/(ε+r)) t H_t - (C/(ε+r)) Γ(t+1-ε-r)/Γ(t) + D t

    공명 반경 안에서는 점화식 반복으로 대체합니다.
    """
    if t == 1:
        return 1.0
    resonant = ResonanceGuard.second_moment_denominators(eps, r, gamma)
    if resonant:
        warn_fallback("second moment", resonant)
        return _recurrence_value(eps, r, gamma, t, 1)

    total_rate = eps + r
    if gamma == 0.5:
        c_constant = MomentConstants.c_constant(eps, r)
        return (
            eps / total_rate * t * harmonic_number(t)
            - c_constant / total_rate * gamma_ratio(t, 1.0 - total_rate)
            + MomentConstants.d_constant(eps, r, gamma) * t
        )

    # rgamma가 흡수된 scaled_ratio를 쓰면 γ <= -1/2에서도 극이 생기지 않는다
    linear = MomentConstants.linear_coefficient(eps, r, gamma) * t
    stop = (
        r
        / total_rate
        / (1.0 - total_rate - 2.0 * gamma)
        * scaled_ratio(t, 1.0 - total_rate)
    )
    memory = -MomentConstants.memory_bracket(eps, r, gamma) * scaled_ratio(
        t, 2.0 * gamma
    )
    return linear + stop + memory


def second_moment_exact(params: Params1D, t: int) -> float:
    """1D 평균 제곱 변위 ⟨X_t²⟩ (s와 무관)"""
    return second_moment_formula(params.eps, params.r, params.gamma, t)


def baseline_second_moment(gamma: float, r: float, t: int) -> float:
    """
    섭동이 없는 (ε = 0) 모델의 ⟨X_t²⟩

    Raises:
        RangeError: r이 (0, 1) 밖이거나 |γ| >= 1일 때
    """
    errors = []
    if not 0.0 < r < 1.0:
        errors += single_error("r", f"r={r} must lie in (0, 1)")
    if not -1.0 < gamma < 1.0:
        errors += single_error("gamma", f"gamma={gamma} must lie in (-1, 1)")
    if errors:
        raise RangeError(errors)

    if t == 1:
        return 1.0
    resonant = ResonanceGuard.baseline_denominators(gamma, r)
    if resonant:
        warn_fallback("baseline second moment", resonant)
        return _recurrence_value(0.0, r, gamma, t, 1)
    return (scaled_ratio(t, 2.0 * gamma) - scaled_ratio(t, 1.0 - r)) / (
        2.0 * gamma + r - 1.0
    )


def first_moment_2d(params: Params2D, t: int) -> Tuple[float, float]:
    """
    2D 평균 변위 Π_{k=1}^{t-1}(I + (γ + γ'A)/k) ⟨X_1⟩

    닫힌 형식이 없으므로 O(t) 행렬 적용으로 계산합니다. A는 복소 평면의 i배이므로
    평균을 복소수 x + iy로 두고 1 + (γ + iγ')/k를 차례로 곱합니다.
    """
    initial = complex(params.s1 - params.s3, params.s2 - params.s4)
    return first_moment_2d_formula(params.gamma, params.gammap, initial, t)


def first_moment_2d_formula(
    gamma: float, gammap: float, initial: complex, t: int
) -> Tuple[float, float]:
    """first_moment_2d의 실수 입력 커널 (초기 평균을 복소수로 받음)"""
    mean = complex(initial)
    rotation = complex(gamma, gammap)
    for k in range(1, t):
        mean *= 1.0 + rotation / k
    return (mean.real, mean.imag)


def second_moment_2d(params: Params2D, t: int) -> float:
    """2D ⟨|X_t|²⟩; A가 반대칭이므로 γ'는 들어가지 않는다"""
    return second_moment_formula(params.eps, params.r, params.gamma, t)


def moment_table(params: Params1D, checkpoints: Sequence[int]) -> Tuple[MomentTable, Method]:
    """
    체크포인트별 (⟨σ²⟩, ⟨X⟩, ⟨X²⟩) 표

    공명 중이면 닫힌 형식을 체크포인트마다 반복하는 대신 점화식을 한 번 진행합니다.
    """
    points = normalize_checkpoints(checkpoints)
    resonant = ResonanceGuard.second_moment_denominators(
        params.eps, params.r, params.gamma
    )
    if resonant:
        warn_fallback("moment table", resonant)
        return iterate_recurrences(params, points[-1], points), Method.RECURRENCE

    table = MomentTable()
    for t in points:
        table.append(
            t,
            sigma2_exact(params, t),
            first_moment(params, t),
            second_moment_exact(params, t),
        )
    return table, Method.CLOSED_FORM


def second_moment_curve(
    eps: float, r: float, gamma: float, checkpoints: Sequence[int]
) -> List[float]:
    """실수 입력 ⟨X²⟩ 곡선 (ε = 0이면 기준 모델)"""
    if eps == 0.0:
        return [baseline_second_moment(gamma, r, t) for t in checkpoints]
    return [second_moment_formula(eps, r, gamma, t) for t in checkpoints]
