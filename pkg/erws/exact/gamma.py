"""
Gamma-function building blocks.

Every closed-form moment is assembled from Γ(t+α)/Γ(t). The ratio is taken
from `scipy.special.poch` for small t and from a Stirling-series difference of
log-gamma values for large t, where subtracting two large lgamma values would
throw away most of the significant digits.
"""

import math

import numpy as np
from scipy import special

from erws.config import get_settings
from erws.errors import DomainError

EULER_GAMMA = float(np.euler_gamma)

# B_2k / (2k (2k - 1))
_STIRLING_COEFFICIENTS = (
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
)


def _check_time(t: int) -> int:
    if isinstance(t, bool) or int(t) != t or t < 1:
        raise DomainError(f"t must be a positive integer, got {t!r}")
    return int(t)


def _nearest_integer(alpha: float) -> int | None:
    k = round(alpha)
    if abs(alpha - k) <= 4.0 * np.finfo(float).eps * max(1.0, abs(alpha)):
        return int(k)
    return None


def _rising_product(t: int, k: int) -> float:
    # Γ(t+k)/Γ(t) for integer k, exact integer arithmetic
    if k >= 0:
        return float(math.prod(range(t, t + k)))
    return 1.0 / float(math.prod(range(t + k, t)))


def _log_ratio_asymptotic(t: int, alpha: float) -> float:
    # ln Γ(t+α) - ln Γ(t), Stirling series written in terms of log1p(α/t)
    log_shift = math.log1p(alpha / t)
    delta = alpha * math.log(t) + (t + alpha - 0.5) * log_shift - alpha
    for k, coefficient in enumerate(_STIRLING_COEFFICIENTS, start=1):
        delta += coefficient * t ** (1 - 2 * k) * math.expm1((1 - 2 * k) * log_shift)
    return delta


def gamma_ratio(t: int, alpha: float) -> float:
    """
    Γ(t+α)/Γ(t) for a positive integer t.

    Raises:
        DomainError: if t is not a positive integer or t + alpha <= 0.
    """
    t = _check_time(t)
    alpha = float(alpha)
    if t + alpha <= 0.0:
        raise DomainError(f"Γ(t+α) has a pole or is undefined at t={t}, α={alpha}")

    k = _nearest_integer(alpha)
    if k is not None:
        return _rising_product(t, k)

    if t < get_settings().gamma_ratio_asymptotic_from:
        return float(special.poch(t, alpha))
    return math.exp(_log_ratio_asymptotic(t, alpha))


def scaled_ratio(t: int, a: float) -> float:
    """
    Γ(t+a)/(Γ(a)Γ(t)), finite for every real a.

    The quotient Γ(t+a)/Γ(a) is the rising factorial (a)_t, so when t + a <= 0
    it is evaluated as a product instead of through the gamma functions.
    """
    t = _check_time(t)
    if t + a <= 0.0:
        rising = math.prod(a + j for j in range(t))
        return rising / math.factorial(t - 1)
    return gamma_ratio(t, a) * float(special.rgamma(a))


def rgamma(x: float) -> float:
    """1/Γ(x), zero at the poles"""
    return float(special.rgamma(x))


def harmonic_number(t: int) -> float:
    """H_t = Σ_{k=1}^t 1/k (pairwise summation below the configured limit)"""
    t = _check_time(t)
    if t <= get_settings().harmonic_pairwise_limit:
        return float(np.sum(1.0 / np.arange(1, t + 1, dtype=np.float64)))
    inv = 1.0 / t
    inv2 = inv * inv
    return (
        math.log(t)
        + EULER_GAMMA
        + 0.5 * inv
        - inv2 / 12.0
        + inv2 * inv2 / 120.0
        - inv2 * inv2 * inv2 / 252.0
    )
