"""
Monte Carlo 앙상블

보행자를 고정 크기 블록으로 나누고, 각 블록을 벡터화하여 시뮬레이션한 뒤
블록별 부분합(Σx, Σ|x|², Σ|x|⁴)을 블록 인덱스 순서로 보정 합산(math.fsum)합니다.
블록 경계와 난수 스트림은 worker_count와 무관하므로 결과는 비트 단위로 같습니다.
"""

import logging
import math
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

import numpy as np
from pydantic import (
    BaseModel,
    ConfigDict,
    Field,
    PositiveInt,
    ValidationError as PydanticValidationError,
    field_validator,
    model_validator,
)

from erws.config import Settings, get_settings
from erws.errors import ResourceError, ValidationError
from erws.model import Params1D, Params2D
from erws.sim.state import outcome_index, step_law_1d, step_law_2d
from erws.sim.streams import WalkerStreams
from erws.utils.async_support import force_sync, gather_bounded

logger = logging.getLogger(__name__)

_STEPS_1D = np.array([1, -1, 0], dtype=np.int64)
_DX_2D = np.array([1, 0, -1, 0, 0], dtype=np.int64)
_DY_2D = np.array([0, 1, 0, -1, 0], dtype=np.int64)


def default_checkpoints(t_max: int) -> List[int]:
    """2의 거듭제곱과 t_max"""
    points = []
    t = 1
    while t < t_max:
        points.append(t)
        t *= 2
    points.append(t_max)
    return points


class EnsembleConfig(BaseModel):
    """앙상블 실행 설정"""

    model_config = ConfigDict(frozen=True)

    walkers: PositiveInt
    t_max: PositiveInt
    checkpoints: List[int] = Field(default_factory=list)
    master_seed: int = Field(
        default_factory=lambda: get_settings().default_master_seed, ge=0, lt=2**64
    )
    worker_count: PositiveInt = 1

    @model_validator(mode="before")
    @classmethod
    def _fill_checkpoints(cls, data):
        if isinstance(data, dict) and not data.get("checkpoints") and "t_max" in data:
            data = {**data, "checkpoints": default_checkpoints(int(data["t_max"]))}
        return data

    @field_validator("checkpoints")
    @classmethod
    def _sorted_unique(cls, value: List[int]) -> List[int]:
        if any(t < 1 for t in value):
            raise ValueError("checkpoints must be >= 1")
        return sorted(set(value))

    @model_validator(mode="after")
    def _within_horizon(self):
        if self.checkpoints and self.checkpoints[-1] > self.t_max:
            raise ValueError(
                f"checkpoint {self.checkpoints[-1]} exceeds t_max={self.t_max}"
            )
        return self

    @classmethod
    def build(cls, **values) -> "EnsembleConfig":
        """
        pydantic 검증 에러를 erws ValidationError로 변환하여 생성

        Raises:
            ValidationError: 필드 검증 실패 시
        """
        try:
            return cls(**values)
        except PydanticValidationError as e:
            errors = []
            for error in e.errors():
                field_path = ".".join(str(loc) for loc in error["loc"])
                errors.append({"field": field_path or "config", "message": error["msg"]})
            raise ValidationError(errors)


@dataclass
class MomentCurve:
    """체크포인트별 앙상블 추정치"""

    checkpoints: List[int]
    mean: List[Tuple[float, ...]]
    msd: List[float]
    msd_se: List[float]
    walkers: int

    @property
    def dim(self) -> int:
        return len(self.mean[0]) if self.mean else 1


def curve_from_values(
    checkpoints: Sequence[int],
    msd: Sequence[float],
    mean: Optional[Sequence[Tuple[float, ...]]] = None,
) -> MomentCurve:
    """정확한 값으로 MomentCurve 생성 (표준오차 0, walkers 0)"""
    return MomentCurve(
        checkpoints=list(checkpoints),
        mean=list(mean) if mean is not None else [(0.0,)] * len(checkpoints),
        msd=list(msd),
        msd_se=[0.0] * len(checkpoints),
        walkers=0,
    )


def simulate_block_1d(
    params: Params1D, seed: int, start: int, count: int, checkpoints: Sequence[int]
) -> np.ndarray:
    """
    보행자 [start, start + count) 블록의 부분합

    Returns:
        (체크포인트 수, 3) 배열: Σx, Σx², Σx⁴
    """
    streams = WalkerStreams(seed, start, count)
    x = np.where(streams.uniforms(0) < params.s, 1, -1).astype(np.int64)
    n = np.ones(count, dtype=np.int64)
    sums = np.empty((len(checkpoints), 3), dtype=np.float64)

    cursor = 0
    t = 1
    while True:
        if t == checkpoints[cursor]:
            xf = x.astype(np.float64)
            r2 = xf * xf
            sums[cursor] = (np.sum(xf), np.sum(r2), np.sum(r2 * r2))
            cursor += 1
            if cursor == len(checkpoints):
                break
        law = step_law_1d(t, x, n, params)
        step = _STEPS_1D[outcome_index(streams.uniforms(t), law)]
        x += step
        n += np.abs(step)
        t += 1
    return sums


def simulate_block_2d(
    params: Params2D, seed: int, start: int, count: int, checkpoints: Sequence[int]
) -> np.ndarray:
    """
    2D 블록 부분합

    Returns:
        (체크포인트 수, 4) 배열: Σx₁, Σx₂, Σ|x|², Σ|x|⁴
    """
    streams = WalkerStreams(seed, start, count)
    first = outcome_index(streams.uniforms(0), params.initial_law)
    x1 = _DX_2D[first].copy()
    x2 = _DY_2D[first].copy()
    nx = np.abs(x1)
    ny = np.abs(x2)
    sums = np.empty((len(checkpoints), 4), dtype=np.float64)

    cursor = 0
    t = 1
    while True:
        if t == checkpoints[cursor]:
            f1 = x1.astype(np.float64)
            f2 = x2.astype(np.float64)
            r2 = f1 * f1 + f2 * f2
            sums[cursor] = (np.sum(f1), np.sum(f2), np.sum(r2), np.sum(r2 * r2))
            cursor += 1
            if cursor == len(checkpoints):
                break
        law = step_law_2d(t, x1, x2, nx, ny, params)
        index = outcome_index(streams.uniforms(t), law)
        dx = _DX_2D[index]
        dy = _DY_2D[index]
        x1 += dx
        x2 += dy
        nx += np.abs(dx)
        ny += np.abs(dy)
        t += 1
    return sums


class EnsembleRunner:
    """
    블록 단위 앙상블 실행기

    블록은 asgiref 스레드 풀에서 최대 worker_count개씩 동시에 실행되고,
    부분합은 블록 순서대로 합쳐집니다.
    """

    def __init__(self, settings: Optional[Settings] = None):
        self._settings = settings

    @property
    def settings(self) -> Settings:
        return self._settings or get_settings()

    def plan_blocks(self, walkers: int) -> List[Tuple[int, int]]:
        """(start, count) 블록 목록"""
        size = self.settings.block_size
        return [(start, min(size, walkers - start)) for start in range(0, walkers, size)]

    def check_memory(self, cfg: EnsembleConfig, columns: int) -> None:
        """
        부분합 누산기와 동시 실행 블록의 작업 배열이 메모리 상한 안인지 확인

        Raises:
            ResourceError: 상한 초과 시
        """
        blocks = len(self.plan_blocks(cfg.walkers))
        accumulators = blocks * len(cfg.checkpoints) * columns * 8
        in_flight = min(cfg.worker_count, blocks)
        working = in_flight * min(self.settings.block_size, cfg.walkers) * 8 * 12
        required = accumulators + working
        if required > self.settings.memory_cap_bytes:
            raise ResourceError(required, self.settings.memory_cap_bytes)

    async def run_async(self, params: Params1D | Params2D, cfg: EnsembleConfig) -> MomentCurve:
        """앙상블을 비동기로 실행"""
        two_d = isinstance(params, Params2D)
        columns = 4 if two_d else 3
        self.check_memory(cfg, columns)

        blocks = self.plan_blocks(cfg.walkers)
        kernel = simulate_block_2d if two_d else simulate_block_1d
        logger.debug(
            f"Running {cfg.walkers} walkers to t={cfg.t_max} in {len(blocks)} blocks "
            f"on {cfg.worker_count} workers"
        )
        partials = await gather_bounded(
            kernel,
            [(params, cfg.master_seed, start, count, cfg.checkpoints) for start, count in blocks],
            cfg.worker_count,
        )
        return self.reduce(partials, cfg, dims=2 if two_d else 1)

    def run(self, params: Params1D | Params2D, cfg: EnsembleConfig) -> MomentCurve:
        """앙상블을 동기로 실행 (내부적으로 run_async)"""
        return force_sync(self.run_async, params, cfg)

    @staticmethod
    def reduce(partials: List[np.ndarray], cfg: EnsembleConfig, dims: int) -> MomentCurve:
        """블록 부분합을 블록 순서대로 보정 합산하여 곡선 생성"""
        walkers = cfg.walkers
        stacked = np.stack(partials)  # (blocks, checkpoints, columns)
        mean, msd, msd_se = [], [], []
        for i in range(len(cfg.checkpoints)):
            totals = [math.fsum(stacked[:, i, column].tolist()) for column in range(dims + 2)]
            second = totals[dims] / walkers
            fourth = totals[dims + 1] / walkers
            if walkers > 1:
                variance = max(fourth - second * second, 0.0) * walkers / (walkers - 1)
                error = math.sqrt(variance / walkers)
            else:
                error = 0.0
            mean.append(tuple(total / walkers for total in totals[:dims]))
            msd.append(second)
            msd_se.append(error)
        return MomentCurve(
            checkpoints=list(cfg.checkpoints),
            mean=mean,
            msd=msd,
            msd_se=msd_se,
            walkers=walkers,
        )


def run_ensemble(params: Params1D, cfg: EnsembleConfig) -> MomentCurve:
    """1D 앙상블 실행"""
    return EnsembleRunner().run(params, cfg)


def run_ensemble_2d(params: Params2D, cfg: EnsembleConfig) -> MomentCurve:
    """2D 앙상블 실행"""
    return EnsembleRunner().run(params, cfg)
