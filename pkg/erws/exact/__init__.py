"""닫힌 형식 모멘트, 점근 전개, 영역 분류"""

from erws.exact.gamma import gamma_ratio, harmonic_number, rgamma, scaled_ratio
from erws.exact.resonance import Method, ResonanceGuard
from erws.exact.moments import (
    MomentConstants,
    baseline_second_moment,
    first_moment,
    first_moment_2d,
    first_moment_2d_formula,
    first_moment_asymptotic,
    first_moment_formula,
    moment_table,
    second_moment_2d,
    second_moment_curve,
    second_moment_exact,
    second_moment_formula,
    sigma2_exact,
    sigma2_formula,
)
from erws.exact.asymptotics import (
    AsymptoticExpansion,
    DiffusionPath,
    ResidualGap,
    Term,
    asymptotic_value,
    classify_parameters,
    classify_regime,
    expansion_formula,
    ode_analogue,
    path_gamma,
    path_params,
    residual_gap,
    residual_threshold,
    second_moment_asymptotics,
    super_diffusive_limit,
)

__all__ = [
    "gamma_ratio",
    "harmonic_number",
    "rgamma",
    "scaled_ratio",
    "Method",
    "ResonanceGuard",
    "MomentConstants",
    "baseline_second_moment",
    "first_moment",
    "first_moment_2d",
    "first_moment_2d_formula",
    "first_moment_asymptotic",
    "first_moment_formula",
    "moment_table",
    "second_moment_2d",
    "second_moment_curve",
    "second_moment_exact",
    "second_moment_formula",
    "sigma2_exact",
    "sigma2_formula",
    "AsymptoticExpansion",
    "DiffusionPath",
    "ResidualGap",
    "Term",
    "asymptotic_value",
    "classify_parameters",
    "classify_regime",
    "expansion_formula",
    "ode_analogue",
    "path_gamma",
    "path_params",
    "residual_gap",
    "residual_threshold",
    "second_moment_asymptotics",
    "super_diffusive_limit",
]
