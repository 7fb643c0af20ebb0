"""Reproducible rational constants from a 64-bit seed.

The generator is SplitMix64 (Steele, Lea and Flood 2014): integer-only, so
the same seed gives the same bytes on every platform.  Each entry draws a
numerator ``next % (2B + 1) - B`` and then a denominator ``1 + next % B``.
"""

from __future__ import annotations

from dataclasses import dataclass

from gmpy2 import mpq

from .errors import ParameterError
from .tauforge import ConstMatrix

__all__ = ["SplitMix64", "SeedSpec", "gen_constants", "gen_vector"]

_M64 = (1 << 64) - 1


class SplitMix64:
    def __init__(self, seed: int):
        self.state = int(seed) & _M64

    def next(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _M64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _M64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _M64
        return z ^ (z >> 31)

    def rational(self, bound: int):
        num = self.next() % (2 * bound + 1) - bound
        den = 1 + self.next() % bound
        return mpq(num, den)


@dataclass(frozen=True)
class SeedSpec:
    """``shape`` lists the column lengths of the constant matrix."""

    seed: int
    shape: tuple[int, ...]
    value_bound: int = 5

    def __post_init__(self):
        if not 0 <= int(self.seed) <= _M64:
            raise ParameterError("seed must be an unsigned 64-bit integer")
        if self.value_bound < 1:
            raise ParameterError("value_bound must be positive")
        shape = tuple(int(x) for x in self.shape)
        if any(x < 0 for x in shape):
            raise ParameterError("column lengths must be >= 0")
        object.__setattr__(self, "shape", shape)


def gen_constants(spec: SeedSpec) -> ConstMatrix:
    """Column-major draws: column 1 top to bottom, then column 2, and so on."""
    rng = SplitMix64(spec.seed)
    return ConstMatrix(tuple(tuple(rng.rational(spec.value_bound) for _ in range(n))
                             for n in spec.shape))


def gen_vector(seed: int, length: int, value_bound: int = 5) -> tuple:
    """A single vector, e.g. the class constants of a reduced tau."""
    cols = gen_constants(SeedSpec(seed, (length,), value_bound)).columns
    return cols[0] if cols else ()
