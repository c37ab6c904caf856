"""
전역 설정

모든 수치 허용 오차, 상한, 앙상블 튜닝 값은 pydantic 모델 하나에 모여 있습니다.
설정 파일은 지원하지 않으며 CLI 플래그 또는 override_settings로만 바뀝니다.
"""

import logging
from contextlib import contextmanager
from typing import Iterator

from pydantic import BaseModel, ConfigDict, Field

logger = logging.getLogger(__name__)

DEFAULT_MASTER_SEED = 0x5EED_E1E9_4A27_0001


class Settings(BaseModel):
    """erws 런타임 설정"""

    model_config = ConfigDict(frozen=True)

    normalization_tolerance: float = Field(default=1e-12, gt=0)
    resonance_radius: float = Field(default=1e-9, gt=0)
    gamma_ratio_asymptotic_from: int = Field(default=32, ge=8)
    harmonic_pairwise_limit: int = Field(default=10**6, ge=1)
    oracle_cap_1d: int = Field(default=8, ge=1)
    oracle_cap_2d: int = Field(default=5, ge=1)
    oracle_tolerance: float = Field(default=1e-12, gt=0)
    block_size: int = Field(default=8192, ge=1)
    memory_cap_bytes: int = Field(default=256 * 1024 * 1024, ge=1)
    default_master_seed: int = Field(default=DEFAULT_MASTER_SEED, ge=0, lt=2**64)


_settings = Settings()


def get_settings() -> Settings:
    """현재 프로세스 설정 반환"""
    return _settings


def configure(**overrides) -> Settings:
    """
    설정 값을 교체

    Args:
        **overrides: Settings 필드 이름과 새 값

    Returns:
        새 Settings 인스턴스
    """
    global _settings
    _settings = _settings.model_copy(update=overrides)
    # model_copy는 검증하지 않으므로 다시 검증
    _settings = Settings.model_validate(_settings.model_dump())
    logger.debug(f"Settings updated: {overrides}")
    return _settings


def reset_settings() -> None:
    """기본 설정으로 복원"""
    global _settings
    _settings = Settings()


@contextmanager
def override_settings(**overrides) -> Iterator[Settings]:
    """테스트용: 블록 안에서만 설정을 덮어씀"""
    global _settings
    previous = _settings
    try:
        yield configure(**overrides)
    finally:
        _settings = previous
