"""
전수 열거 오라클

모든 이력을 정수 코드(1D는 3진수, 2D는 5진수)로 나열하고, 각 단계의 조건부 확률을
전체 이력에서 직접(기억된 단계를 균등하게 고르는 혼합으로) 계산합니다.
충분통계량 축약을 쓰지 않으므로 sim 모듈의 독립적인 심판이 됩니다.
"""

import logging
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

from erws.config import get_settings
from erws.errors import CapExceeded
from erws.model import ExactParams1D, ExactParams2D, Params1D, Params2D, rotate

logger = logging.getLogger(__name__)

STEPS_1D: Tuple[int, ...] = (1, -1, 0)
STEPS_2D: Tuple[Tuple[int, int], ...] = ((1, 0), (0, 1), (-1, 0), (0, -1), (0, 0))

_INDEX_2D: Dict[Tuple[int, int], int] = {step: i for i, step in enumerate(STEPS_2D)}


def _law_1d(step: int, params) -> Tuple:
    # (P(+1), P(-1), P(0)) when the remembered step is `step`
    if step == 1:
        return (params.p, params.q, params.r)
    if step == -1:
        return (params.q, params.p, params.r)
    return (params.eps / 2, params.eps / 2, 1 - params.eps)


def _law_2d(step: Tuple[int, int], params) -> List:
    law = [0] * 5
    if step == (0, 0):
        quarter = params.eps / 4
        return [quarter, quarter, quarter, quarter, 1 - params.eps]
    law[_INDEX_2D[step]] += params.p
    law[_INDEX_2D[rotate(step, 2)]] += params.q
    law[_INDEX_2D[rotate(step, 1)]] += params.pp
    law[_INDEX_2D[rotate(step, 3)]] += params.qp
    law[4] += params.r
    return law


def conditional_dist_full_history(
    history: Sequence, params: Params1D | Params2D, exact: bool = False
) -> Tuple:
    """
    전체 이력에서 다음 단계의 조건부 분포를 계산

    1D는 (+1, -1, 0), 2D는 (+i, +j, -i, -j, 0) 순서입니다.

    Args:
        history: 지금까지의 단계 목록 (1D는 정수, 2D는 (x, y) 튜플)
        params: 모델 파라미터
        exact: True이면 유리수 보기로 정확하게 계산

    Returns:
        확률 튜플
    """
    if not history:
        raise ValueError("history must be non-empty")
    view = params.exact() if exact else params
    t = len(history)

    if isinstance(params, Params2D):
        totals = [0] * 5
        for step in history:
            for i, prob in enumerate(_law_2d(tuple(step), view)):
                totals[i] += prob
    else:
        totals = [0] * 3
        for step in history:
            for i, prob in enumerate(_law_1d(step, view)):
                totals[i] += prob

    if exact:
        return tuple(Fraction(total) / t for total in totals)
    return tuple(total / t for total in totals)


def encode_history(history: Sequence, alphabet: Sequence) -> int:
    """이력을 정수 코드로 (첫 단계가 최하위 자릿수)"""
    base = len(alphabet)
    code = 0
    for step in reversed(history):
        code = code * base + alphabet.index(step)
    return code


def decode_history(code: int, length: int, alphabet: Sequence) -> List:
    base = len(alphabet)
    history = []
    for _ in range(length):
        code, digit = divmod(code, base)
        history.append(alphabet[digit])
    return history


def _check_cap(t: int, cap: int) -> None:
    if t < 1 or t > cap:
        raise CapExceeded(t, cap)


def _expand(params, t: int, alphabet: Sequence, initial: Sequence) -> List[Tuple[int, Fraction]]:
    # level-by-level tree expansion, probabilities from full-history conditionals
    base = len(alphabet)
    level = [(i, prob) for i, prob in enumerate(initial) if prob != 0]
    for length in range(1, t):
        weight = base**length
        next_level = []
        for code, prob in level:
            history = decode_history(code, length, alphabet)
            law = conditional_dist_full_history(history, params, exact=True)
            for digit, step_prob in enumerate(law):
                if step_prob != 0:
                    next_level.append((code + digit * weight, prob * step_prob))
        level = next_level
    return level


def enumerate_exact(params: Params1D, t: int) -> Tuple[Fraction, Fraction]:
    """
    모든 1D 이력을 열거하여 (⟨X_t⟩, ⟨X_t²⟩)를 유리수로 계산

    Raises:
        CapExceeded: t가 설정된 상한(기본 8)을 넘을 때
    """
    _check_cap(t, get_settings().oracle_cap_1d)
    view: ExactParams1D = params.exact()
    leaves = _expand(params, t, STEPS_1D, (view.s, 1 - view.s))

    m1 = Fraction(0)
    m2 = Fraction(0)
    for code, prob in leaves:
        x = sum(decode_history(code, t, STEPS_1D))
        m1 += prob * x
        m2 += prob * x * x
    logger.debug(f"Enumerated {len(leaves)} histories at t={t}")
    return m1, m2


def enumerate_exact_2d(
    params: Params2D, t: int
) -> Tuple[Tuple[Fraction, Fraction], Fraction]:
    """
    모든 2D 이력을 열거하여 (⟨X_t⟩, ⟨|X_t|²⟩)를 유리수로 계산

    Raises:
        CapExceeded: t가 설정된 상한(기본 5)을 넘을 때
    """
    _check_cap(t, get_settings().oracle_cap_2d)
    view: ExactParams2D = params.exact()
    leaves = _expand(params, t, STEPS_2D, view.initial_law)

    mx = Fraction(0)
    my = Fraction(0)
    m2 = Fraction(0)
    for code, prob in leaves:
        history = decode_history(code, t, STEPS_2D)
        x = sum(step[0] for step in history)
        y = sum(step[1] for step in history)
        mx += prob * x
        my += prob * y
        m2 += prob * (x * x + y * y)
    logger.debug(f"Enumerated {len(leaves)} 2D histories at t={t}")
    return (mx, my), m2
