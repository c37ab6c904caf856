"""독립 기준값 생성기: 점화식 반복과 전수 열거"""

from erws.oracle.recurrence import (
    MomentTable,
    iterate_baseline,
    iterate_moment_recurrences,
    iterate_recurrences,
    iterate_recurrences_2d,
    normalize_checkpoints,
)
from erws.oracle.enumeration import (
    STEPS_1D,
    STEPS_2D,
    conditional_dist_full_history,
    decode_history,
    encode_history,
    enumerate_exact,
    enumerate_exact_2d,
)

__all__ = [
    "MomentTable",
    "iterate_baseline",
    "iterate_moment_recurrences",
    "iterate_recurrences",
    "iterate_recurrences_2d",
    "normalize_checkpoints",
    "STEPS_1D",
    "STEPS_2D",
    "conditional_dist_full_history",
    "decode_history",
    "encode_history",
    "enumerate_exact",
    "enumerate_exact_2d",
]
