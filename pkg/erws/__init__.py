"""
erws - 섭동된 정지 코끼리 무작위 보행(ERWS) 모멘트 도구

닫힌 형식 모멘트, 점근 전개와 영역 분류, 독립 오라클, 결정적 Monte Carlo 앙상블
"""

from erws.config import Settings, configure, get_settings, override_settings, reset_settings
from erws.errors import (
    CapExceeded,
    CsvFormatError,
    DomainError,
    ErwsError,
    InsufficientData,
    NormalizationError,
    RangeError,
    ResonanceFallback,
    ResourceError,
    ValidationError,
)
from erws.model import Params1D, Params2D, Regime, RegimeReport, validate_params_1d, validate_params_2d
from erws.exact import (
    classify_regime,
    first_moment,
    first_moment_2d,
    residual_gap,
    second_moment_2d,
    second_moment_asymptotics,
    second_moment_exact,
    sigma2_exact,
)
from erws.oracle import enumerate_exact, enumerate_exact_2d, iterate_recurrences
from erws.sim import EnsembleConfig, MomentCurve, fit_exponent, run_ensemble, run_ensemble_2d

__version__ = "0.1.0"

__all__ = [
    "Settings",
    "configure",
    "get_settings",
    "override_settings",
    "reset_settings",
    "CapExceeded",
    "CsvFormatError",
    "DomainError",
    "ErwsError",
    "InsufficientData",
    "NormalizationError",
    "RangeError",
    "ResonanceFallback",
    "ResourceError",
    "ValidationError",
    "Params1D",
    "Params2D",
    "Regime",
    "RegimeReport",
    "validate_params_1d",
    "validate_params_2d",
    "classify_regime",
    "first_moment",
    "first_moment_2d",
    "residual_gap",
    "second_moment_2d",
    "second_moment_asymptotics",
    "second_moment_exact",
    "sigma2_exact",
    "enumerate_exact",
    "enumerate_exact_2d",
    "iterate_recurrences",
    "EnsembleConfig",
    "MomentCurve",
    "fit_exponent",
    "run_ensemble",
    "run_ensemble_2d",
]
