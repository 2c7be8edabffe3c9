"""Seeded pseudo-random numbers via SplitMix64.

The generators in this package must reproduce instances bit-for-bit from a
64-bit seed, including in ports to other languages, so the stream is pinned
to the public-domain SplitMix64 step function rather than whatever the host
runtime ships.  Constants:

    state    += 0x9E3779B97F4A7C15                 (per step)
    z = state; z = (z ^ z >> 30) * 0xBF58476D1CE4E5B9
    z = (z ^ z >> 27) * 0x94D049BB133111EB; return z ^ z >> 31

Bounded draws use rejection sampling on the top of the 64-bit range, and
shuffles are standard Fisher-Yates from the top index down, so those are
reproducible too given the same call sequence.
"""

from __future__ import annotations

_MASK = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15
_MIX1 = 0xBF58476D1CE4E5B9
_MIX2 = 0x94D049BB133111EB


def _scramble(z: int) -> int:
    z = ((z ^ (z >> 30)) * _MIX1) & _MASK
    z = ((z ^ (z >> 27)) * _MIX2) & _MASK
    return z ^ (z >> 31)


def derive(seed: int, tag: int) -> int:
    """Child seed for substream ``tag``, e.g. one seed per rejection attempt."""
    return _scramble((seed & _MASK) ^ ((tag * _GAMMA) & _MASK))


class SplitMix64:
    """SplitMix64 stream over a 64-bit state."""

    def __init__(self, seed: int):
        self._state = seed & _MASK

    def next_u64(self) -> int:
        self._state = (self._state + _GAMMA) & _MASK
        return _scramble(self._state)

    def below(self, bound: int) -> int:
        """Uniform integer in ``[0, bound)`` by rejection, bias-free."""
        if bound <= 0:
            raise ValueError("bound must be positive")
        threshold = ((1 << 64) // bound) * bound
        while True:
            v = self.next_u64()
            if v < threshold:
                return v % bound

    def choice(self, seq):
        return seq[self.below(len(seq))]

    def shuffle(self, items: list) -> None:
        for i in range(len(items) - 1, 0, -1):
            j = self.below(i + 1)
            items[i], items[j] = items[j], items[i]
