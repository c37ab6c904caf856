"""
공명 가드

닫힌 형식의 분모 (1-2γ), (1-ε-r-2γ), (1-ε-r), (2γ+r-1)이 설정된 반경 안에 들어오면
점화식 반복으로 대체하고 ResonanceFallback 경고를 남깁니다.
"""

import logging
import warnings
from enum import Enum
from typing import List

from erws.config import get_settings
from erws.errors import ResonanceFallback

logger = logging.getLogger(__name__)


class Method(str, Enum):
    """값을 만든 계산 경로"""

    CLOSED_FORM = "closed_form"
    RECURRENCE = "recurrence"


class ResonanceGuard:
    """분모 근접성 검사"""

    @staticmethod
    def near_zero(value: float) -> bool:
        return abs(value) < get_settings().resonance_radius

    @staticmethod
    def sigma2_denominators(eps: float, r: float) -> List[str]:
        if ResonanceGuard.near_zero(1.0 - eps - r):
            return ["1-eps-r"]
        return []

    @staticmethod
    def second_moment_denominators(eps: float, r: float, gamma: float) -> List[str]:
        """
        ⟨X²⟩ 닫힌 형식에서 공명 중인 분모 이름 목록

        정확히 γ = 1/2인 경우는 별도 분기가 있으므로 (1-2γ)는 공명으로 보지 않습니다.
        """
        names = ResonanceGuard.sigma2_denominators(eps, r)
        if gamma != 0.5 and ResonanceGuard.near_zero(1.0 - 2.0 * gamma):
            names.append("1-2gamma")
        if gamma != 0.5 and ResonanceGuard.near_zero(1.0 - eps - r - 2.0 * gamma):
            names.append("1-eps-r-2gamma")
        return names

    @staticmethod
    def baseline_denominators(gamma: float, r: float) -> List[str]:
        if ResonanceGuard.near_zero(2.0 * gamma + r - 1.0):
            return ["2gamma+r-1"]
        return []


def warn_fallback(what: str, denominators: List[str]) -> None:
    """대체 경로 사용을 경고와 로그로 알림"""
    message = f"{what}: closed form replaced by recurrence near {', '.join(denominators)}"
    logger.warning(message)
    warnings.warn(message, ResonanceFallback, stacklevel=3)
