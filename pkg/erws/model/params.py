"""
모델 파라미터 컨테이너와 검증

Params1D / Params2D는 생성 후 불변이며 스레드 간 공유해도 안전합니다.
검증은 ParameterValidator가 담당하고, 한 번의 호출에서 발견된 모든 문제를
ValidationError 계열 예외 하나로 보고합니다.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from erws.config import get_settings
from erws.errors import NormalizationError, RangeError

logger = logging.getLogger(__name__)


def rotate(v: Tuple, k: int = 1) -> Tuple:
    """고정 90도 회전 A(vx, vy) = (-vy, vx)를 k번 적용"""
    x, y = v
    for _ in range(k % 4):
        x, y = -y, x
    return (x, y)


def _as_fraction(value: float | Fraction) -> Fraction:
    # 사람이 입력한 십진수를 그대로 유리수로 읽는다 (0.55 -> 11/20)
    if isinstance(value, Fraction):
        return value
    return Fraction(repr(float(value)))


@dataclass(frozen=True)
class ExactParams1D:
    """Params1D의 유리수 보기 (r = 1 - p - q로 고정되어 정확히 정규화됨)"""

    p: Fraction
    q: Fraction
    r: Fraction
    eps: Fraction
    s: Fraction

    @property
    def gamma(self) -> Fraction:
        return self.p - self.q


@dataclass(frozen=True)
class ExactParams2D:
    """Params2D의 유리수 보기"""

    p: Fraction
    q: Fraction
    pp: Fraction
    qp: Fraction
    r: Fraction
    eps: Fraction
    s1: Fraction
    s2: Fraction
    s3: Fraction
    s4: Fraction

    @property
    def gamma(self) -> Fraction:
        return self.p - self.q

    @property
    def gammap(self) -> Fraction:
        return self.pp - self.qp

    @property
    def initial_law(self) -> Tuple[Fraction, Fraction, Fraction, Fraction]:
        return (self.s1, self.s2, self.s3, self.s4)


@dataclass(frozen=True)
class Params1D:
    """
    검증된 1D 모델 파라미터

    gamma = p - q는 파생 값입니다. validate_params_1d 또는 Params1D.from_gamma로 생성하세요.
    """

    p: float
    q: float
    r: float
    eps: float
    s: float
    gamma: float

    @classmethod
    def from_gamma(
        cls, eps: float, r: float, gamma: float, s: float = 0.5
    ) -> "Params1D":
        """
        (ε, r, γ)에서 p = (1-r+γ)/2, q = (1-r-γ)/2를 유도하여 생성

        Raises:
            RangeError: 유도된 p, q가 (0, 1)을 벗어날 때
        """
        p = (1.0 - r + gamma) / 2.0
        q = (1.0 - r - gamma) / 2.0
        return ParameterValidator.validate_1d(p, q, r, eps, s, gamma=gamma)

    @property
    def total_rate(self) -> float:
        """ε + r"""
        return self.eps + self.r

    def exact(self) -> ExactParams1D:
        """유리수 보기 반환"""
        p, q = _as_fraction(self.p), _as_fraction(self.q)
        return ExactParams1D(
            p=p, q=q, r=1 - p - q, eps=_as_fraction(self.eps), s=_as_fraction(self.s)
        )


@dataclass(frozen=True)
class Params2D:
    """
    검증된 2D 모델 파라미터

    정규화 조건은 p + q + p' + q' + r = 1 입니다.
    초기 방향 분포 (s1, s2, s3, s4)는 (+i, +j, -i, -j) 순서입니다.
    """

    p: float
    q: float
    pp: float
    qp: float
    r: float
    eps: float
    s1: float
    s2: float
    s3: float
    s4: float
    gamma: float
    gammap: float

    @classmethod
    def from_gamma(
        cls,
        eps: float,
        r: float,
        gamma: float,
        gammap: float,
        lateral: Optional[float] = None,
        initial: Sequence[float] = (0.25, 0.25, 0.25, 0.25),
    ) -> "Params2D":
        """
        (ε, r, γ, γ')에서 네 방향 확률을 유도하여 생성

        Args:
            lateral: 회전 방향 질량 p' + q' (기본값 (1 - r) / 2)
        """
        if lateral is None:
            lateral = (1.0 - r) / 2.0
        straight = 1.0 - r - lateral
        p = (straight + gamma) / 2.0
        q = (straight - gamma) / 2.0
        pp = (lateral + gammap) / 2.0
        qp = (lateral - gammap) / 2.0
        return ParameterValidator.validate_2d(
            p, q, pp, qp, r, eps, *initial, gamma=gamma, gammap=gammap
        )

    @property
    def total_rate(self) -> float:
        return self.eps + self.r

    @property
    def initial_law(self) -> Tuple[float, float, float, float]:
        return (self.s1, self.s2, self.s3, self.s4)

    def exact(self) -> ExactParams2D:
        p, q = _as_fraction(self.p), _as_fraction(self.q)
        pp, qp = _as_fraction(self.pp), _as_fraction(self.qp)
        s1, s2, s3 = (_as_fraction(v) for v in (self.s1, self.s2, self.s3))
        return ExactParams2D(
            p=p,
            q=q,
            pp=pp,
            qp=qp,
            r=1 - p - q - pp - qp,
            eps=_as_fraction(self.eps),
            s1=s1,
            s2=s2,
            s3=s3,
            s4=1 - s1 - s2 - s3,
        )


class ParameterValidator:
    """파라미터 범위/정규화 검증"""

    @staticmethod
    def check_open_unit(values: Dict[str, float]) -> List[Dict[str, str]]:
        """각 값이 열린 구간 (0, 1)에 있는지 확인하고 에러 목록 반환"""
        errors = []
        for name, value in values.items():
            if not 0.0 < value < 1.0:
                errors.append(
                    {"field": name, "message": f"{name}={value} must lie in (0, 1)"}
                )
        return errors

    @staticmethod
    def check_sum(field: str, values: Sequence[float]) -> List[Dict[str, str]]:
        """합이 1인지 허용 오차 내에서 확인"""
        tolerance = get_settings().normalization_tolerance
        total = sum(values)
        if abs(total - 1.0) > tolerance:
            return [
                {
                    "field": field,
                    "message": f"sum is {total!r}, expected 1 within {tolerance}",
                }
            ]
        return []

    @staticmethod
    def resolve_gamma(
        field: str, derived: float, hint: Optional[float]
    ) -> Tuple[float, List[Dict[str, str]]]:
        """명시적 gamma 힌트가 p - q와 일치하면 힌트를 사용"""
        if hint is None:
            return derived, []
        if abs(hint - derived) > get_settings().normalization_tolerance:
            return derived, [
                {
                    "field": field,
                    "message": f"{field}={hint} disagrees with derived value {derived}",
                }
            ]
        return hint, []

    @staticmethod
    def validate_1d(
        p: float,
        q: float,
        r: float,
        eps: float,
        s: float,
        gamma: Optional[float] = None,
    ) -> Params1D:
        """
        1D 파라미터 검증

        Raises:
            RangeError: 값이 (0, 1)을 벗어날 때
            NormalizationError: |p + q + r - 1| > 허용 오차
        """
        values = {"p": p, "q": q, "r": r, "eps": eps, "s": s}
        errors = ParameterValidator.check_open_unit(values)
        if errors:
            raise RangeError(errors)

        errors = ParameterValidator.check_sum("p+q+r", (p, q, r))
        if errors:
            raise NormalizationError(errors)

        gamma, errors = ParameterValidator.resolve_gamma("gamma", p - q, gamma)
        if errors:
            raise RangeError(errors)

        return Params1D(p=p, q=q, r=r, eps=eps, s=s, gamma=gamma)

    @staticmethod
    def validate_2d(
        p: float,
        q: float,
        pp: float,
        qp: float,
        r: float,
        eps: float,
        s1: float,
        s2: float,
        s3: float,
        s4: float,
        gamma: Optional[float] = None,
        gammap: Optional[float] = None,
    ) -> Params2D:
        """
        2D 파라미터 검증

        Raises:
            RangeError: 값이 (0, 1)을 벗어날 때
            NormalizationError: p+q+p'+q'+r 또는 s1+..+s4가 1이 아닐 때
        """
        values = {
            "p": p,
            "q": q,
            "pp": pp,
            "qp": qp,
            "r": r,
            "eps": eps,
            "s1": s1,
            "s2": s2,
            "s3": s3,
            "s4": s4,
        }
        errors = ParameterValidator.check_open_unit(values)
        if errors:
            raise RangeError(errors)

        errors = ParameterValidator.check_sum("p+q+pp+qp+r", (p, q, pp, qp, r))
        errors += ParameterValidator.check_sum("s1+s2+s3+s4", (s1, s2, s3, s4))
        if errors:
            raise NormalizationError(errors)

        gamma, errors = ParameterValidator.resolve_gamma("gamma", p - q, gamma)
        gammap, more = ParameterValidator.resolve_gamma("gammap", pp - qp, gammap)
        if errors or more:
            raise RangeError(errors + more)

        return Params2D(
            p=p,
            q=q,
            pp=pp,
            qp=qp,
            r=r,
            eps=eps,
            s1=s1,
            s2=s2,
            s3=s3,
            s4=s4,
            gamma=gamma,
            gammap=gammap,
        )


def validate_params_1d(p: float, q: float, r: float, eps: float, s: float) -> Params1D:
    """1D 파라미터 검증 후 Params1D 반환"""
    return ParameterValidator.validate_1d(p, q, r, eps, s)


def validate_params_2d(
    p: float,
    q: float,
    pp: float,
    qp: float,
    r: float,
    eps: float,
    s1: float,
    s2: float,
    s3: float,
    s4: float,
) -> Params2D:
    """2D 파라미터 검증 후 Params2D 반환"""
    return ParameterValidator.validate_2d(p, q, pp, qp, r, eps, s1, s2, s3, s4)
