"""
확산 영역 분류 결과 타입
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import List, Optional, Tuple


class Regime(str, Enum):
    """평균 제곱 변위의 장시간 성장 영역"""

    SUB_DIFFUSIVE = "sub_diffusive"
    DIFFUSIVE = "diffusive"
    LOG_ANOMALOUS = "log_anomalous"
    SUPER_DIFFUSIVE = "super_diffusive"


@dataclass(frozen=True)
class RegimeReport:
    """
    (ε, r, γ)의 분류 결과

    Attributes:
        regime: 영역 레이블
        leading_exponent: 주항의 t 지수
        leading_coefficient: 주항 계수 (diffusive이면 유효 확산 계수)
        secondary_terms: 나머지 항 (exponent, coefficient), 지수 내림차순
        residual_gap: diffusive(ε > 0)일 때 D_eff - 1/r
        has_log: 주항이 t ln t 형태인지
        resonant: 닫힌 형식 분모가 공명 반경 안에 있는지
    """

    regime: Regime
    leading_exponent: float
    leading_coefficient: float
    secondary_terms: List[Tuple[float, float]] = field(default_factory=list)
    residual_gap: Optional[float] = None
    has_log: bool = False
    resonant: bool = False

    @property
    def diffusivity(self) -> Optional[float]:
        """diffusive 영역의 유효 확산 계수"""
        if self.regime is Regime.DIFFUSIVE:
            return self.leading_coefficient
        return None
