"""Deterministic bit source for reproducible sampling.

SplitMix64: state advances by the golden-gamma constant and is finalised
by two xor-multiply rounds.  Output is a pure function of the seed, with
identical results on every platform.  Triangle bits are drawn row-major
(row 1 first, each row left to right), one 64-bit output per bit, taking
the top bit.
"""

from __future__ import annotations

from .families import BitTriangle

_MASK = (1 << 64) - 1


class SplitMix64:
    def __init__(self, seed: int):
        self._state = seed & _MASK

    def next_u64(self) -> int:
        self._state = (self._state + 0x9E3779B97F4A7C15) & _MASK
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return z ^ (z >> 31)

    def next_bit(self) -> int:
        return self.next_u64() >> 63


def random_triangle(n: int, seed: int) -> BitTriangle:
    """A uniformly random order-n bit triangle, determined by the seed."""
    gen = SplitMix64(seed)
    return BitTriangle(tuple(tuple(gen.next_bit() for _ in range(i)) for i in range(n)))
