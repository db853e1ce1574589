"""SplitMix64: a tiny, platform-independent seeded generator.

Everything random in the verification grids goes through this so a seed
reproduces the same sample on any machine and Python version.
"""

from __future__ import annotations

import math

_MASK = (1 << 64) - 1


class SplitMix64:
    def __init__(self, seed: int = 0):
        self.state = seed & _MASK

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return z ^ (z >> 31)

    def uniform(self) -> float:
        """Float in ``[0, 1)`` from the top 53 bits."""
        return (self.next_u64() >> 11) * 2.0**-53

    def randint(self, lo: int, hi: int) -> int:
        """Integer in ``[lo, hi]`` inclusive."""
        span = hi - lo + 1
        if span <= 0:
            raise ValueError(f"empty range [{lo}, {hi}]")
        return lo + self.next_u64() % span

    def choice(self, seq):
        return seq[self.randint(0, len(seq) - 1)]


def units(mu: int) -> list[int]:
    """Residues in ``[1, mu]`` coprime to ``mu``."""
    return [v for v in range(1, mu + 1) if math.gcd(v, mu) == 1]


def sample_rotations(rng: SplitMix64, n: int, mu: int, count: int) -> list[tuple[int, ...]]:
    """Up to ``count`` distinct tuples of ``n+1`` units mod ``mu``.

    Returns fewer than ``count`` only when fewer distinct tuples exist.
    """
    pool = units(mu)
    total = len(pool) ** (n + 1)
    out: list[tuple[int, ...]] = []
    seen = set()
    while len(out) < min(count, total):
        nu = tuple(rng.choice(pool) for _ in range(n + 1))
        if nu not in seen:
            seen.add(nu)
            out.append(nu)
    return out
