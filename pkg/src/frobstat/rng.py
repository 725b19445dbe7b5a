"""Deterministic 64-bit PRNG (splitmix64) used everywhere randomness is needed.

The update rule is fixed and published here so that seeded runs reproduce
bit-for-bit on any platform:

    state <- (state + 0x9E3779B97F4A7C15) mod 2^64
    z <- state; z ^= z >> 30; z *= 0xBF58476D1CE4E5B9 (mod 2^64)
    z ^= z >> 27; z *= 0x94D049BB133111EB (mod 2^64); z ^= z >> 31

Independent shard streams are derived with `child_seed(seed, index)`,
which is also part of the published contract.
"""

from __future__ import annotations

_MASK = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15
_MIX1 = 0xBF58476D1CE4E5B9
_MIX2 = 0x94D049BB133111EB


def mix64(z: int) -> int:
    """The splitmix64 finalizer: a fixed 64-bit bijective mixer."""
    z &= _MASK
    z = ((z ^ (z >> 30)) * _MIX1) & _MASK
    z = ((z ^ (z >> 27)) * _MIX2) & _MASK
    return z ^ (z >> 31)


def child_seed(seed: int, index: int) -> int:
    """Seed for the `index`-th derived stream of a run seeded with `seed`."""
    return mix64(mix64(seed & _MASK) ^ ((index + 1) & _MASK))


class SplitMix64:
    """Sequential splitmix64 stream."""

    __slots__ = ("_state",)

    def __init__(self, seed: int):
        self._state = seed & _MASK

    def next_u64(self) -> int:
        self._state = (self._state + _GAMMA) & _MASK
        return mix64(self._state)

    def randbelow(self, n: int) -> int:
        """Unbiased draw from [0, n) by rejection sampling."""
        if n <= 0:
            raise ValueError("randbelow() needs n >= 1")
        if n == 1:
            return 0
        limit = (1 << 64) - ((1 << 64) % n)
        while True:
            u = self.next_u64()
            if u < limit:
                return u % n
