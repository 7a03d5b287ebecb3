"""Small deterministic PRNG used wherever reproducible pseudorandomness is needed.

xorshift64* with the multiplier from Vigna's "An experimental exploration of
Marsaglia's xorshift generators" (2685821657736338717); the seed is passed
through one splitmix64 step (constants 0x9E3779B97F4A7C15,
0xBF58476D1CE4E5B9, 0x94D049BB133111EB) so that seed 0 yields a nonzero
xorshift state.  No statistical quality is claimed beyond reproducibility.
"""

from __future__ import annotations

_MASK = (1 << 64) - 1


def _splitmix64(x: int) -> int:
    x = (x + 0x9E3779B97F4A7C15) & _MASK
    x = ((x ^ (x >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
    x = ((x ^ (x >> 27)) * 0x94D049BB133111EB) & _MASK
    return x ^ (x >> 31)


class XorShift64Star:
    """Deterministic 64-bit generator; identical streams on every platform."""

    def __init__(self, seed: int):
        if not 0 <= seed < (1 << 64):
            raise ValueError("seed must be a 64-bit unsigned integer")
        state = _splitmix64(seed)
        # xorshift state must never be zero
        self._state = state if state != 0 else 0x106689D45497FDB5

    def next_u64(self) -> int:
        x = self._state
        x ^= (x >> 12)
        x = (x ^ (x << 25)) & _MASK
        x ^= (x >> 27)
        self._state = x
        return (x * 2685821657736338717) & _MASK

    def below(self, n: int) -> int:
        """Uniform-ish integer in [0, n); modulo bias is irrelevant at n << 2^64."""
        if n <= 0:
            raise ValueError("below() needs a positive bound")
        return self.next_u64() % n

    def sample_distinct(self, n: int, count: int) -> list[int]:
        """count distinct indices from range(n), in first-drawn order."""
        if count > n:
            raise ValueError("cannot draw more distinct indices than exist")
        seen: list[int] = []
        taken = set()
        while len(seen) < count:
            i = self.below(n)
            if i not in taken:
                taken.add(i)
                seen.append(i)
        return seen
