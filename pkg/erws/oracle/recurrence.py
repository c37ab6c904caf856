"""
점화식 반복 오라클

⟨σ²⟩, ⟨X⟩, ⟨X²⟩의 정확한 전진 반복입니다. 테스트의 기준값이자
닫힌 형식이 공명 반경 안에 들어왔을 때의 대체 경로로 사용됩니다.
"""

import logging
from dataclasses import dataclass, field
from typing import Iterable, List, Sequence, Tuple

from erws.errors import ValidationError
from erws.model import Params1D, Params2D

logger = logging.getLogger(__name__)


@dataclass
class MomentTable:
    """
    체크포인트별 모멘트 표

    1D에서 m1은 실수, 2D에서는 (x, y) 튜플입니다.
    """

    t_values: List[int] = field(default_factory=list)
    sigma2: List[float] = field(default_factory=list)
    m1: List[float | Tuple[float, float]] = field(default_factory=list)
    m2: List[float] = field(default_factory=list)

    def append(self, t: int, sigma2: float, m1, m2: float) -> None:
        self.t_values.append(t)
        self.sigma2.append(sigma2)
        self.m1.append(m1)
        self.m2.append(m2)

    def row(self, t: int) -> Tuple[float, float | Tuple[float, float], float]:
        """t에서의 (sigma2, m1, m2)"""
        index = self.t_values.index(t)
        return self.sigma2[index], self.m1[index], self.m2[index]

    def __len__(self) -> int:
        return len(self.t_values)


def normalize_checkpoints(
    checkpoints: Iterable[int], t_max: int | None = None
) -> List[int]:
    """
    체크포인트 검증 후 정렬/중복 제거

    Raises:
        ValidationError: 1 미만이거나 t_max를 넘는 체크포인트가 있을 때
    """
    points = sorted({int(t) for t in checkpoints})
    errors = []
    if not points:
        errors.append({"field": "checkpoints", "message": "at least one checkpoint"})
    elif points[0] < 1:
        errors.append({"field": "checkpoints", "message": "checkpoints must be >= 1"})
    elif t_max is not None and points[-1] > t_max:
        errors.append(
            {
                "field": "checkpoints",
                "message": f"checkpoint {points[-1]} exceeds t_max={t_max}",
            }
        )
    if errors:
        raise ValidationError(errors)
    return points


def iterate_moment_recurrences(
    eps: float, r: float, gamma: float, initial_mean: complex, checkpoints: Sequence[int]
) -> Tuple[List[int], List[float], List[complex], List[float]]:
    """
    세 점화식을 실수 입력으로 반복 (ε = 0 기준 모델 포함)

    평균은 복소수로 진행합니다. 1D에서는 허수부가 0이고,
    2D 회전이 필요하면 iterate_recurrences_2d가 따로 처리합니다.
    """
    points = normalize_checkpoints(checkpoints)
    total_rate = eps + r
    sigma2, m1, m2 = 1.0, initial_mean, 1.0
    ts, sigmas, means, seconds = [], [], [], []

    cursor = 0
    t = 1
    while True:
        if t == points[cursor]:
            ts.append(t)
            sigmas.append(sigma2)
            means.append(m1)
            seconds.append(m2)
            cursor += 1
            if cursor == len(points):
                break
        sigma2_next = (1.0 - total_rate / t) * sigma2 + eps / t
        m2 = (1.0 + 2.0 * gamma / t) * m2 + sigma2_next
        m1 = (1.0 + gamma / t) * m1
        sigma2 = sigma2_next
        t += 1

    logger.debug(f"Iterated recurrences to t={points[-1]} (eps={eps}, r={r})")
    return ts, sigmas, means, seconds


def iterate_recurrences(
    params: Params1D, t_max: int, checkpoints: Sequence[int]
) -> MomentTable:
    """
    Params1D의 모멘트를 t_max까지 반복하고 체크포인트 값을 반환

    Args:
        params: 검증된 1D 파라미터
        t_max: 반복 상한
        checkpoints: [1, t_max] 안의 체크포인트
    """
    points = normalize_checkpoints(checkpoints, t_max)
    ts, sigmas, means, seconds = iterate_moment_recurrences(
        params.eps, params.r, params.gamma, 2.0 * params.s - 1.0, points
    )
    return MomentTable(
        t_values=ts,
        sigma2=sigmas,
        m1=[float(m.real) if isinstance(m, complex) else float(m) for m in means],
        m2=seconds,
    )


def iterate_baseline(gamma: float, r: float, checkpoints: Sequence[int]) -> MomentTable:
    """ε = 0 기준 모델의 점화식 반복 (대칭 시작)"""
    ts, sigmas, _, seconds = iterate_moment_recurrences(0.0, r, gamma, 0.0, checkpoints)
    return MomentTable(t_values=ts, sigma2=sigmas, m1=[0.0] * len(ts), m2=seconds)


def iterate_recurrences_2d(
    params: Params2D, t_max: int, checkpoints: Sequence[int]
) -> MomentTable:
    """
    2D 모멘트 반복

    평균은 ⟨X_{t+1}⟩ = (I + (γ + γ'A)/t)⟨X_t⟩이고, A가 복소 평면에서 i배와 같으므로
    복소수 계수 1 + (γ + iγ')/t로 진행합니다. |X|²는 1D와 같은 점화식입니다.
    """
    points = normalize_checkpoints(checkpoints, t_max)
    ts, sigmas, _, seconds = iterate_moment_recurrences(
        params.eps, params.r, params.gamma, 0.0, points
    )

    rotation = complex(params.gamma, params.gammap)
    mean = complex(params.s1 - params.s3, params.s2 - params.s4)
    means = []
    t = 1
    for target in points:
        while t < target:
            mean = mean * (1.0 + rotation / t)
            t += 1
        means.append((mean.real, mean.imag))

    return MomentTable(t_values=ts, sigma2=sigmas, m1=means, m2=seconds)
