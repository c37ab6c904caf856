"""
Counter-based per-walker uniform streams.

Stream identity (pinned, changing it changes every simulated number):

    key(seed, w)  = mix64(seed + (w + 1) * WALKER_INCREMENT)       mod 2**64
    u(seed, w, k) = (mix64(key(seed, w) + (k + 1) * DRAW_INCREMENT) >> 11) * 2**-53

`mix64` is the SplitMix64 output function. Draw k = 0 is the initial step and
draw k = t is the step from time t to t + 1, so any walker's draw can be
computed without touching any other walker, and scheduling cannot change
the numbers.
"""

import numpy as np

MASK64 = (1 << 64) - 1
WALKER_INCREMENT = 0x9E3779B97F4A7C15
DRAW_INCREMENT = 0xD1B54A32D192ED03
_MIX_1 = 0xBF58476D1CE4E5B9
_MIX_2 = 0x94D049BB133111EB
_UNIT = 2.0**-53


def mix64(z: int) -> int:
    """SplitMix64 output function on a Python int"""
    z &= MASK64
    z = ((z ^ (z >> 30)) * _MIX_1) & MASK64
    z = ((z ^ (z >> 27)) * _MIX_2) & MASK64
    return z ^ (z >> 31)


def reference_uniform(seed: int, walker: int, draw: int) -> float:
    """Scalar reference implementation of u(seed, walker, draw)"""
    key = mix64(seed + (walker + 1) * WALKER_INCREMENT)
    return (mix64(key + (draw + 1) * DRAW_INCREMENT) >> 11) * _UNIT


def _mix64_array(z: np.ndarray) -> np.ndarray:
    z = (z ^ (z >> np.uint64(30))) * np.uint64(_MIX_1)
    z = (z ^ (z >> np.uint64(27))) * np.uint64(_MIX_2)
    return z ^ (z >> np.uint64(31))


class WalkerStreams:
    """
    Vectorised streams for a contiguous range of walker indices.

    Args:
        seed: 64-bit master seed
        start: first walker index
        count: number of walkers
    """

    def __init__(self, seed: int, start: int, count: int):
        self.seed = int(seed) & MASK64
        self.start = int(start)
        self.count = int(count)
        with np.errstate(over="ignore"):
            walkers = np.arange(start + 1, start + count + 1, dtype=np.uint64)
            offsets = walkers * np.uint64(WALKER_INCREMENT)
            self.keys = _mix64_array(offsets + np.uint64(self.seed))

    def uniforms(self, draw: int) -> np.ndarray:
        """Draw number `draw` of every walker in the range, in [0, 1)"""
        offset = np.uint64(((draw + 1) * DRAW_INCREMENT) & MASK64)
        with np.errstate(over="ignore"):
            bits = _mix64_array(self.keys + offset)
        return (bits >> np.uint64(11)).astype(np.float64) * _UNIT
