"""
Large-time asymptotics, regime classification and residual diffusivity.
"""

import logging
import math
from dataclasses import dataclass, field
from enum import Enum
from typing import List, NamedTuple, Tuple

import numpy as np

from erws.errors import RangeError, single_error
from erws.exact.gamma import EULER_GAMMA, rgamma
from erws.exact.moments import MomentConstants
from erws.exact.resonance import ResonanceGuard, warn_fallback
from erws.model import Params1D, Regime, RegimeReport
from erws.oracle.recurrence import iterate_moment_recurrences

logger = logging.getLogger(__name__)

# checkpoints for the fitted expansion used at resonance
_FIT_CHECKPOINTS = [2**k for k in range(10, 21)]


class Term(NamedTuple):
    coefficient: float
    exponent: float
    has_log: bool = False

    def value(self, t: float) -> float:
        power = self.coefficient * t**self.exponent
        return power * math.log(t) if self.has_log else power


@dataclass
class AsymptoticExpansion:
    """
    Σ coefficient · t^exponent · (ln t if has_log) ordered by growth.

    Terms with equal exponents are ordered log term first, so the γ = 1/2
    expansion lists t ln t ahead of t.
    """

    terms: List[Term] = field(default_factory=list)
    fitted: bool = False

    def __post_init__(self):
        self.terms = sorted(
            (Term(*term) for term in self.terms if term[0] != 0.0),
            key=lambda term: (term.exponent, term.has_log),
            reverse=True,
        )

    @property
    def leading(self) -> Term:
        return self.terms[0]

    def value(self, t: float) -> float:
        return math.fsum(term.value(t) for term in self.terms)


def asymptotic_value(expansion: AsymptoticExpansion, t: float) -> float:
    return expansion.value(t)


def _fitted_expansion(eps: float, r: float, gamma: float) -> AsymptoticExpansion:
    ts, _, _, seconds = iterate_moment_recurrences(eps, r, gamma, 0.0, _FIT_CHECKPOINTS)
    slope, intercept = np.polyfit(np.log(ts), np.log(seconds), 1)
    logger.debug(f"Fitted expansion t^{slope:.6f} at eps={eps}, r={r}, gamma={gamma}")
    return AsymptoticExpansion([Term(math.exp(intercept), float(slope))], fitted=True)


def expansion_formula(eps: float, r: float, gamma: float) -> AsymptoticExpansion:
    """second_moment_asymptotics의 실수 입력 커널 (ε >= 0)"""
    resonant = ResonanceGuard.second_moment_denominators(eps, r, gamma)
    if eps == 0.0:
        resonant += ResonanceGuard.baseline_denominators(gamma, r)
    if resonant:
        warn_fallback("asymptotic expansion", sorted(set(resonant)))
        return _fitted_expansion(eps, r, gamma)

    total_rate = eps + r
    c_constant = MomentConstants.c_constant(eps, r)
    d_constant = MomentConstants.d_constant(eps, r, gamma)
    if gamma == 0.5:
        return AsymptoticExpansion(
            [
                Term(eps / total_rate, 1.0, True),
                Term(d_constant + EULER_GAMMA * eps / total_rate, 1.0),
                Term(-c_constant / total_rate, 1.0 - total_rate),
            ]
        )
    return AsymptoticExpansion(
        [
            Term(MomentConstants.linear_coefficient(eps, r, gamma), 1.0),
            Term(MomentConstants.stop_coefficient(eps, r, gamma), 1.0 - total_rate),
            Term(d_constant, 2.0 * gamma),
        ]
    )


def second_moment_asymptotics(params: Params1D) -> AsymptoticExpansion:
    """⟨X_t²⟩의 대시간 전개"""
    return expansion_formula(params.eps, params.r, params.gamma)


def classify_parameters(eps: float, r: float, gamma: float) -> RegimeReport:
    """classify_regime의 실수 입력 커널 (ε = 0이면 기준 모델)"""
    if eps == 0.0:
        return _classify_baseline(gamma, r)

    total_rate = eps + r
    resonant = bool(ResonanceGuard.second_moment_denominators(eps, r, gamma))
    c_constant = MomentConstants.c_constant(eps, r)

    if gamma == 0.5:
        d_constant = MomentConstants.d_constant(eps, r, gamma)
        return RegimeReport(
            regime=Regime.LOG_ANOMALOUS,
            leading_exponent=1.0,
            leading_coefficient=eps / total_rate,
            secondary_terms=[
                (1.0, d_constant + EULER_GAMMA * eps / total_rate),
                (1.0 - total_rate, -c_constant / total_rate),
            ],
            has_log=True,
            resonant=resonant,
        )

    linear = MomentConstants.linear_coefficient(eps, r, gamma)
    memory = MomentConstants.d_constant(eps, r, gamma)
    if ResonanceGuard.near_zero(1.0 - total_rate - 2.0 * gamma):
        # the stop and memory powers merge into one t^{1-ε-r} ln t term
        stop_terms = []
        memory_terms = []
    else:
        stop_terms = [(1.0 - total_rate, MomentConstants.stop_coefficient(eps, r, gamma))]
        memory_terms = [(2.0 * gamma, memory)]

    if gamma < 0.5:
        secondary = stop_terms + memory_terms
        return RegimeReport(
            regime=Regime.DIFFUSIVE,
            leading_exponent=1.0,
            leading_coefficient=linear,
            secondary_terms=sorted(secondary, reverse=True),
            residual_gap=linear - 1.0 / r,
            resonant=resonant,
        )
    return RegimeReport(
        regime=Regime.SUPER_DIFFUSIVE,
        leading_exponent=2.0 * gamma,
        leading_coefficient=memory,
        secondary_terms=[(1.0, linear)] + stop_terms,
        resonant=resonant,
    )


def _classify_baseline(gamma: float, r: float) -> RegimeReport:
    resonant = bool(ResonanceGuard.baseline_denominators(gamma, r))
    if gamma == 0.5:
        return RegimeReport(
            regime=Regime.DIFFUSIVE,
            leading_exponent=1.0,
            leading_coefficient=1.0 / r,
            secondary_terms=[(1.0 - r, -rgamma(1.0 - r) / r)],
        )

    if resonant:
        # 2γ = 1 - r: the two powers merge into t^{1-r} ln t / Γ(1-r)
        return RegimeReport(
            regime=Regime.SUB_DIFFUSIVE if gamma < 0.5 else Regime.SUPER_DIFFUSIVE,
            leading_exponent=1.0 - r,
            leading_coefficient=rgamma(1.0 - r),
            has_log=True,
            resonant=True,
        )

    denominator = 2.0 * gamma + r - 1.0
    memory_term = (2.0 * gamma, rgamma(2.0 * gamma) / denominator)
    stop_term = (1.0 - r, -rgamma(1.0 - r) / denominator)
    leading, secondary = sorted([memory_term, stop_term], reverse=True)
    regime = Regime.SUPER_DIFFUSIVE if gamma > 0.5 else Regime.SUB_DIFFUSIVE
    return RegimeReport(
        regime=regime,
        leading_exponent=leading[0],
        leading_coefficient=leading[1],
        secondary_terms=[secondary],
    )


def classify_regime(params: Params1D | Tuple[float, float]) -> RegimeReport:
    """
    영역 분류

    Args:
        params: Params1D, 또는 ε = 0 기준 모델의 (gamma, r)
    """
    if isinstance(params, Params1D):
        return classify_parameters(params.eps, params.r, params.gamma)
    gamma, r = params
    return classify_parameters(0.0, r, gamma)


class DiffusionPath(str, Enum):
    """(r, γ) 평면의 세 경로"""

    REGULAR = "regular"
    RESIDUAL = "residual"
    SUPER = "super"


class ResidualGap(NamedTuple):
    gamma: float
    value: float
    gap: float


def path_gamma(eps: float, r: float, path: DiffusionPath | str) -> float:
    path = DiffusionPath(path)
    if path is DiffusionPath.REGULAR:
        return (1.0 - eps) / 2.0
    if path is DiffusionPath.RESIDUAL:
        return (1.0 - eps * r) / 2.0
    return (1.0 + eps * r) / 2.0


def _check_path(eps: float, r: float, gamma: float) -> None:
    errors = []
    if not 0.0 <= eps < 1.0:
        errors += single_error("eps", f"eps={eps} must lie in [0, 1)")
    if not 0.0 < r < 1.0:
        errors += single_error("r", f"r={r} must lie in (0, 1)")
    if not 0.0 < gamma < 1.0:
        errors += single_error("gamma", f"gamma={gamma} must lie in (0, 1)")
    for name, value in (("p", (1.0 - r + gamma) / 2.0), ("q", (1.0 - r - gamma) / 2.0)):
        if not 0.0 < value < 1.0:
            errors += single_error(name, f"implied {name}={value} must lie in (0, 1)")
    if errors:
        raise RangeError(errors)


def path_params(eps: float, r: float, path: DiffusionPath | str, s: float = 0.5) -> Params1D:
    """경로 위의 Params1D (p, q는 γ와 r에서 유도)"""
    gamma = path_gamma(eps, r, path)
    _check_path(eps, r, gamma)
    return Params1D.from_gamma(eps, r, gamma, s)


def super_diffusive_limit(r: float) -> float:
    """ε ↓ 0에서 초확산 경로 계수의 극한 r⁻² + r⁻¹"""
    return 1.0 / (r * r) + 1.0 / r


def residual_gap(eps: float, r: float, path: DiffusionPath | str) -> ResidualGap:
    """
    경로별 확산 계수(또는 초확산 계수)와 섭동 없는 값과의 차이

    Raises:
        RangeError: γ 또는 유도된 p, q가 (0, 1)을 벗어날 때
    """
    path = DiffusionPath(path)
    gamma = path_gamma(eps, r, path)
    _check_path(eps, r, gamma)
    total_rate = eps + r

    if path is DiffusionPath.REGULAR:
        value = 1.0 / total_rate
        return ResidualGap(gamma, value, value - 1.0 / r)
    if path is DiffusionPath.RESIDUAL:
        value = 1.0 / (r * total_rate)
        return ResidualGap(gamma, value, value - 1.0 / r)

    value = rgamma(1.0 + eps * r) * (
        1.0 / (r * total_rate) + r / (total_rate * (total_rate + eps * r))
    )
    return ResidualGap(gamma, value, value - super_diffusive_limit(r))


def residual_threshold(delta: float) -> Tuple[float, float]:
    """
    잔여 확산 간격이 delta를 넘도록 하는 (r 상한, ε 상한)

    r < min(1/3, 1/δ), ε < 1/6이면 ε + r < 1/2이므로 (1/r)(1/(ε+r) - 1) > 1/r > δ.
    """
    if delta <= 0.0:
        raise RangeError(single_error("delta", "delta must be positive"))
    return min(1.0 / 3.0, 1.0 / delta), 1.0 / 6.0


def ode_analogue(
    params: Params1D, c_const: float, d_const: float, t: float
) -> Tuple[float, float]:
    """
    연속 시간 유사 방정식 x' + (ε+r)x/t = ε/t, y' - 2γy/t = x의 해

    공명 분모에서는 발산하는 항을 대응하는 t^a ln t 해로 바꾸고 경고합니다.
    """
    if t <= 0:
        raise RangeError(single_error("t", "t must be positive"))
    eps, r, gamma = params.eps, params.r, params.gamma
    total_rate = eps + r
    x = c_const / t**total_rate + eps / total_rate

    if gamma == 0.5:
        y = (
            eps / total_rate * t * math.log(t)
            - c_const / total_rate * t ** (1.0 - total_rate)
            + d_const * t
        )
        return x, y

    resonant = [
        name
        for name in ResonanceGuard.second_moment_denominators(eps, r, gamma)
        if name != "1-eps-r"
    ]
    if resonant:
        warn_fallback("ode analogue", resonant)

    if "1-2gamma" in resonant:
        linear = eps / total_rate * t * math.log(t)
    else:
        linear = MomentConstants.linear_coefficient(eps, r, gamma) * t
    if "1-eps-r-2gamma" in resonant:
        stop = c_const * t ** (1.0 - total_rate) * math.log(t)
    else:
        stop = c_const / (1.0 - total_rate - 2.0 * gamma) * t ** (1.0 - total_rate)
    return x, linear + stop + d_const * t ** (2.0 * gamma)
