"""모델 파라미터와 공통 타입"""

from erws.model.params import (
    ExactParams1D,
    ExactParams2D,
    Params1D,
    Params2D,
    ParameterValidator,
    rotate,
    validate_params_1d,
    validate_params_2d,
)
from erws.model.regime import Regime, RegimeReport

__all__ = [
    "ExactParams1D",
    "ExactParams2D",
    "Params1D",
    "Params2D",
    "ParameterValidator",
    "rotate",
    "validate_params_1d",
    "validate_params_2d",
    "Regime",
    "RegimeReport",
]
