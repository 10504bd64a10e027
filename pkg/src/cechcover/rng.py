"""Seedable, portable random number generation.

Scenarios must reproduce bit-for-bit from a seed on any platform or
implementation, so the generator is pinned to SplitMix64 (Steele, Lea &
Flood 2014) rather than any library default whose stream might change.
The exact algorithm, so another implementation can match it:

    state <- (state + 0x9E3779B97F4A7C15) mod 2^64
    z <- state
    z <- ((z XOR (z >> 30)) * 0xBF58476D1CE4E5B9) mod 2^64
    z <- ((z XOR (z >> 27)) * 0x94D049BB133111EB) mod 2^64
    output: z XOR (z >> 31)

Floats take the top 53 bits of one output: (u64 >> 11) * 2^-53, uniform on
[0, 1).  Poisson counts use the exponential-sum method: accumulate
Exp(1) = -log(1 - u) variates and return how many fit below the mean.
"""

from __future__ import annotations

import math

_MASK = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15
_MIX1 = 0xBF58476D1CE4E5B9
_MIX2 = 0x94D049BB133111EB


class SplitMix64:
    """SplitMix64 stream seeded with a 64-bit unsigned integer."""

    def __init__(self, seed: int):
        if not 0 <= seed <= _MASK:
            raise ValueError(f"seed must be a 64-bit unsigned integer, got {seed}")
        self._state = seed

    def next_u64(self) -> int:
        self._state = (self._state + _GAMMA) & _MASK
        z = self._state
        z = ((z ^ (z >> 30)) * _MIX1) & _MASK
        z = ((z ^ (z >> 27)) * _MIX2) & _MASK
        return z ^ (z >> 31)

    def next_float(self) -> float:
        """Uniform on [0, 1), 53-bit resolution."""
        return (self.next_u64() >> 11) * 2.0**-53

    def uniform(self, low: float, high: float) -> float:
        """Uniform on [low, high); low == high returns low exactly."""
        return low + (high - low) * self.next_float()

    def poisson(self, mean: float) -> int:
        """Poisson count with the given mean, by summing Exp(1) gaps.

        Consumes a variable number of draws (mean + 1 on average), so
        callers that need a fixed draw layout must draw the count first.
        """
        if mean <= 0:
            return 0
        total = 0.0
        count = 0
        while True:
            # -log1p(-u) is Exp(1); log1p keeps precision for small u.
            total += -math.log1p(-self.next_float())
            if total > mean:
                return count
            count += 1
