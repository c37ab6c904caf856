"""
Log-log exponent fitting.
"""

import math
from typing import NamedTuple, Tuple

import numpy as np

from erws.errors import InsufficientData
from erws.sim.ensemble import MomentCurve

MIN_POINTS = 5


class ExponentFit(NamedTuple):
    exponent: float
    log_coefficient: float
    r_squared: float


def fit_exponent(curve: MomentCurve, window: Tuple[float, float]) -> ExponentFit:
    """
    Ordinary least squares of ln msd against ln t over t_lo <= t <= t_hi.

    Raises:
        InsufficientData: fewer than five checkpoints in the window, or a
            non-positive msd inside it.
    """
    t_lo, t_hi = window
    points = [
        (t, m) for t, m in zip(curve.checkpoints, curve.msd) if t_lo <= t <= t_hi
    ]
    if len(points) < MIN_POINTS:
        raise InsufficientData(
            f"{len(points)} checkpoints in [{t_lo}, {t_hi}], need {MIN_POINTS}"
        )
    if any(m <= 0.0 for _, m in points):
        raise InsufficientData("msd must be positive inside the fit window")

    log_t = np.log(np.array([t for t, _ in points], dtype=np.float64))
    log_m = np.log(np.array([m for _, m in points], dtype=np.float64))
    slope, intercept = np.polyfit(log_t, log_m, 1)

    residual = log_m - (slope * log_t + intercept)
    total = float(np.sum((log_m - log_m.mean()) ** 2))
    r_squared = 1.0 if total == 0.0 else 1.0 - float(np.sum(residual**2)) / total
    if not math.isfinite(r_squared):
        r_squared = 0.0
    return ExponentFit(float(slope), float(intercept), r_squared)
