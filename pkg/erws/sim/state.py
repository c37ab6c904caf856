"""
충분통계량 상태와 조건부 단계 법칙

조건부 확률은 이력 전체가 아니라 (t, X_t, 0이 아닌 단계 수)에만 의존하므로
보행자 하나의 상태는 상수 크기입니다. 확률 커널은 스칼라와 numpy 배열 모두에서
같은 연산 순서로 동작하므로, 벡터화된 앙상블과 advance()가 같은 선택을 합니다.
"""

from dataclasses import dataclass
from typing import Sequence, Tuple

import numpy as np

from erws.model import Params1D, Params2D


@dataclass(frozen=True)
class WalkerState1D:
    """t: 시간, x: X_t, n: 0이 아닌 단계 수"""

    t: int
    x: int
    n: int

    @classmethod
    def from_history(cls, history: Sequence[int]) -> "WalkerState1D":
        return cls(
            t=len(history),
            x=sum(history),
            n=sum(1 for step in history if step != 0),
        )

    def is_consistent(self) -> bool:
        """|x| <= n <= t 이고 n과 x의 홀짝이 같은지"""
        return abs(self.x) <= self.n <= self.t and (self.n - self.x) % 2 == 0


@dataclass(frozen=True)
class WalkerState2D:
    """t: 시간, x: X_t (정수 2-벡터), nx/ny: 축별 0이 아닌 단계 수"""

    t: int
    x: Tuple[int, int]
    nx: int
    ny: int

    @classmethod
    def from_history(cls, history: Sequence[Tuple[int, int]]) -> "WalkerState2D":
        return cls(
            t=len(history),
            x=(sum(step[0] for step in history), sum(step[1] for step in history)),
            nx=sum(1 for step in history if step[0] != 0),
            ny=sum(1 for step in history if step[1] != 0),
        )

    def is_consistent(self) -> bool:
        x1, x2 = self.x
        return (
            abs(x1) <= self.nx
            and abs(x2) <= self.ny
            and self.nx + self.ny <= self.t
            and (self.nx - x1) % 2 == 0
            and (self.ny - x2) % 2 == 0
        )


def step_law_1d(t, x, n, params) -> Tuple:
    """
    (P(+1), P(-1), P(0)) from the sufficient statistic.

    P(±1) = (n(1-ε-r) ± xγ)/(2t) + ε/2,  P(0) = 1 - ε - n(1-ε-r)/t.
    `params` may be a Params1D or its rational view; t, x, n may be arrays.
    """
    move = 1 - params.eps - params.r
    gamma = params.gamma
    base = n * move
    drift = x * gamma
    plus = (base + drift) / (2 * t) + params.eps / 2
    minus = (base - drift) / (2 * t) + params.eps / 2
    zero = 1 - params.eps - base / t
    return plus, minus, zero


def step_law_2d(t, x1, x2, nx, ny, params) -> Tuple:
    """
    (P(+i), P(+j), P(-i), P(-j), P(0)) from the sufficient statistic.

    For a direction σ with Aσ its rotation,
    P(σ) = (γ Σσ_k·σ - γ' Σσ_k·Aσ + (p+q) n_∥ + (p'+q') n_⊥ - (nx+ny)ε/2) / (2t) + ε/4.
    """
    gamma = params.gamma
    gammap = params.gammap
    straight = params.p + params.q
    lateral = params.pp + params.qp
    nonzero = nx + ny
    restart = nonzero * params.eps / 2
    along_x = straight * nx + lateral * ny
    along_y = straight * ny + lateral * nx

    def direction(aligned, rotated, axis_weight):
        return (
            gamma * aligned - gammap * rotated + axis_weight - restart
        ) / (2 * t) + params.eps / 4

    east = direction(x1, x2, along_x)
    north = direction(x2, -x1, along_y)
    west = direction(-x1, -x2, along_x)
    south = direction(-x2, x1, along_y)
    zero = nonzero * (params.r + params.eps - 1) / t + 1 - params.eps
    return east, north, west, south, zero


def outcome_index(u, probabilities: Sequence):
    """
    Inverse transform in the fixed outcome order.

    Returns the number of cumulative thresholds at or below u, i.e. the index
    of the selected outcome; works on scalars and arrays alike.
    """
    threshold = probabilities[0]
    index = u >= threshold
    index = index.astype(np.int64) if isinstance(index, np.ndarray) else int(index)
    for probability in probabilities[1:-1]:
        threshold = threshold + probability
        index = index + (u >= threshold)
    return index


def step_distribution(
    state: WalkerState1D, params: Params1D, exact: bool = False
) -> Tuple:
    """다음 단계 분포 (+1, -1, 0); exact=True이면 유리수로 계산"""
    view = params.exact() if exact else params
    return step_law_1d(state.t, state.x, state.n, view)


def step_distribution_2d(
    state: WalkerState2D, params: Params2D, exact: bool = False
) -> Tuple:
    """다음 단계 분포 (+i, +j, -i, -j, 0)"""
    view = params.exact() if exact else params
    return step_law_2d(state.t, state.x[0], state.x[1], state.nx, state.ny, view)


STEP_VALUES_1D = (1, -1, 0)
STEP_VECTORS_2D = ((1, 0), (0, 1), (-1, 0), (0, -1), (0, 0))


def init_walker(params: Params1D, u: float) -> WalkerState1D:
    """첫 단계: u < s이면 +1"""
    return WalkerState1D(t=1, x=1 if u < params.s else -1, n=1)


def init_walker_2d(params: Params2D, u: float) -> WalkerState2D:
    """첫 단계: (s1, s2, s3, s4)에 대한 역변환"""
    dx, dy = STEP_VECTORS_2D[outcome_index(u, params.initial_law)]
    return WalkerState2D(t=1, x=(dx, dy), nx=abs(dx), ny=abs(dy))


def advance(state: WalkerState1D, params: Params1D, u: float) -> WalkerState1D:
    """역변환으로 σ_{t+1}을 뽑아 상태 갱신"""
    step = STEP_VALUES_1D[outcome_index(u, step_distribution(state, params))]
    return WalkerState1D(t=state.t + 1, x=state.x + step, n=state.n + abs(step))


def advance_2d(state: WalkerState2D, params: Params2D, u: float) -> WalkerState2D:
    dx, dy = STEP_VECTORS_2D[outcome_index(u, step_distribution_2d(state, params))]
    return WalkerState2D(
        t=state.t + 1,
        x=(state.x[0] + dx, state.x[1] + dy),
        nx=state.nx + abs(dx),
        ny=state.ny + abs(dy),
    )


def mean_step(state: WalkerState1D, params: Params1D) -> float:
    """조건부 평균 단계 ⟨σ_{t+1} | 이력⟩ = γ X_t / t"""
    return params.gamma * state.x / state.t


def mean_step_2d(state: WalkerState2D, params: Params2D) -> Tuple[float, float]:
    """⟨σ_{t+1} | 이력⟩ = (γ + γ'A) X_t / t"""
    x1, x2 = state.x
    return (
        (params.gamma * x1 - params.gammap * x2) / state.t,
        (params.gamma * x2 + params.gammap * x1) / state.t,
    )
