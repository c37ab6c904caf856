"""충분통계량 기반 Monte Carlo 앙상블과 지수 피팅"""

from erws.sim.state import (
    WalkerState1D,
    WalkerState2D,
    advance,
    advance_2d,
    init_walker,
    init_walker_2d,
    mean_step,
    mean_step_2d,
    outcome_index,
    step_distribution,
    step_distribution_2d,
    step_law_1d,
    step_law_2d,
)
from erws.sim.streams import WalkerStreams, mix64, reference_uniform
from erws.sim.ensemble import (
    EnsembleConfig,
    EnsembleRunner,
    MomentCurve,
    curve_from_values,
    default_checkpoints,
    run_ensemble,
    run_ensemble_2d,
)
from erws.sim.fit import ExponentFit, fit_exponent

__all__ = [
    "WalkerState1D",
    "WalkerState2D",
    "advance",
    "advance_2d",
    "init_walker",
    "init_walker_2d",
    "mean_step",
    "mean_step_2d",
    "outcome_index",
    "step_distribution",
    "step_distribution_2d",
    "step_law_1d",
    "step_law_2d",
    "WalkerStreams",
    "mix64",
    "reference_uniform",
    "EnsembleConfig",
    "EnsembleRunner",
    "MomentCurve",
    "curve_from_values",
    "default_checkpoints",
    "run_ensemble",
    "run_ensemble_2d",
    "ExponentFit",
    "fit_exponent",
]
