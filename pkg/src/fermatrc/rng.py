"""Deterministic 64-bit PRNG used by every randomized routine in the package.

The generator is splitmix64 (Steele, Lea, Flood 2014): a 64-bit counter
advanced by the golden-gamma constant and finalized with two xor-multiply
mixing rounds.  It is implemented here, rather than taken from the platform,
so that seeded fixtures survive interpreter and OS changes byte for byte.
"""

from __future__ import annotations

MASK64 = (1 << 64) - 1

_GAMMA = 0x9E3779B97F4A7C15
_MIX1 = 0xBF58476D1CE4E5B9
_MIX2 = 0x94D049BB133111EB


def mix64(z: int) -> int:
    """The splitmix64 finalizer, usable on its own for seed derivation."""
    z &= MASK64
    z = ((z ^ (z >> 30)) * _MIX1) & MASK64
    z = ((z ^ (z >> 27)) * _MIX2) & MASK64
    return z ^ (z >> 31)


def derive_seed(seed: int, salt: int) -> int:
    """Stable sub-stream seed for (seed, salt), independent across salts."""
    return mix64((seed & MASK64) + (salt + 1) * _GAMMA)


class SplitMix64:
    """Sequential splitmix64 stream."""

    __slots__ = ("state",)

    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next_u64(self) -> int:
        self.state = (self.state + _GAMMA) & MASK64
        return mix64(self.state)

    def below(self, n: int) -> int:
        # Plain reduction; the modulo bias is irrelevant at desk-scale n
        # and keeping the draw count per sample fixed aids reproducibility.
        if n <= 0:
            raise ValueError("below() needs a positive bound")
        return self.next_u64() % n

    def split(self, salt: int) -> "SplitMix64":
        return SplitMix64(derive_seed(self.state, salt))
