"""SplitMix64: a tiny, documented, cross-platform deterministic PRNG.

Verification cases must be reproducible from a caseId alone, on any
platform, forever.  That rules out ``random.Random`` (Mersenne state is
opaque and its API drifts) in favor of SplitMix64 (Steele, Lea, Flood,
"Fast splittable pseudorandom number generators", OOPSLA 2014): a 64-bit
counter sequence passed through a fixed avalanche mix.  Pure integer
arithmetic, ~10 lines, trivially identical everywhere.

Streams are split by label so each suite draws from its own generator and
adding cases to one suite never perturbs another.
"""

from __future__ import annotations

from fractions import Fraction

__all__ = ["SplitMix64", "fnv1a64", "stream"]

_MASK = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15


def fnv1a64(text: str) -> int:
    """FNV-1a 64-bit hash of a label, for deriving per-suite seeds."""
    h = 0xCBF29CE484222325
    for byte in text.encode("utf-8"):
        h = ((h ^ byte) * 0x100000001B3) & _MASK
    return h


class SplitMix64:
    """Deterministic 64-bit generator with splittable substreams."""

    __slots__ = ("_state",)

    def __init__(self, seed: int):
        self._state = seed & _MASK

    def next_u64(self) -> int:
        self._state = (self._state + _GAMMA) & _MASK
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return z ^ (z >> 31)

    def randint(self, lo: int, hi: int) -> int:
        """Uniform-ish integer in [lo, hi] via modulo reduction.

        The modulo bias is < 2^-50 for every span used here (spans are
        tiny against 2^64); exact uniformity is not required, only
        determinism.
        """
        if hi < lo:
            raise ValueError(f"empty range [{lo}, {hi}]")
        return lo + self.next_u64() % (hi - lo + 1)

    def nonzero_randint(self, lo: int, hi: int) -> int:
        """Like randint but never 0; range must contain a nonzero value."""
        if lo == 0 and hi == 0:
            raise ValueError("range [0, 0] has no nonzero value")
        while True:
            v = self.randint(lo, hi)
            if v != 0:
                return v

    def fraction(self, bound: int) -> Fraction:
        """Nonzero rational with numerator in [-bound, bound], denominator
        in [1, bound]."""
        if bound < 1:
            raise ValueError(f"bound must be >= 1, got {bound}")
        return Fraction(self.nonzero_randint(-bound, bound), self.randint(1, bound))

    def sample(self, pool, k: int) -> list:
        """k distinct elements from an indexable pool (partial Fisher-Yates)."""
        items = list(pool)
        if k > len(items):
            raise ValueError(f"cannot sample {k} from pool of {len(items)}")
        for i in range(k):
            j = self.randint(i, len(items) - 1)
            items[i], items[j] = items[j], items[i]
        return items[:k]

    def shuffle(self, items: list) -> None:
        """In-place Fisher-Yates shuffle."""
        for i in range(len(items) - 1, 0, -1):
            j = self.randint(0, i)
            items[i], items[j] = items[j], items[i]

    def spawn(self) -> "SplitMix64":
        """Independent child generator (SplitMix's split operation)."""
        return SplitMix64(self.next_u64())


def stream(seed: int, label: str) -> SplitMix64:
    """Per-label substream of a master seed, stable across runs."""
    return SplitMix64(seed ^ fnv1a64(label))
