"""Laurent polynomials in a formal variable ``z`` with Poly coefficients."""

from __future__ import annotations

from typing import Mapping

from .poly import Bank, Poly, elementary_sequence, expand_shift, to_rat

__all__ = ["LaurentPoly", "miwa_shift", "laurent_mul_residue"]


class LaurentPoly:
    """Finite map ``power of z -> Poly`` with zero coefficients dropped."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: Mapping[int, object] | None = None):
        d = {}
        for k, v in (coeffs or {}).items():
            v = Poly.coerce(v)
            if v:
                d[int(k)] = v
        self._c = d

    @classmethod
    def z(cls, power: int = 1) -> "LaurentPoly":
        return cls({power: 1})

    def items(self):
        return sorted(self._c.items())

    def powers(self) -> list[int]:
        return sorted(self._c)

    def min_power(self) -> int | None:
        return min(self._c) if self._c else None

    def max_power(self) -> int | None:
        return max(self._c) if self._c else None

    def __getitem__(self, power: int) -> Poly:
        return self._c.get(power, Poly())

    def __iter__(self):
        # without this, iteration would fall back to __getitem__ and never stop
        return iter(self.powers())

    def __bool__(self) -> bool:
        return bool(self._c)

    def __len__(self) -> int:
        return len(self._c)

    def __eq__(self, other) -> bool:
        if isinstance(other, LaurentPoly):
            return self._c == other._c
        if isinstance(other, Poly) or isinstance(other, int):
            return self._c == LaurentPoly({0: other})._c
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._c.items()))

    def __neg__(self):
        return LaurentPoly({k: -v for k, v in self._c.items()})

    def __add__(self, other):
        other = _coerce(other)
        d = dict(self._c)
        for k, v in other._c.items():
            d[k] = d[k] + v if k in d else v
        return LaurentPoly(d)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, LaurentPoly):
            if isinstance(other, Poly):
                return LaurentPoly({k: v * other for k, v in self._c.items()})
            c = to_rat(other)
            return LaurentPoly({k: v.scale(c) for k, v in self._c.items()})
        d: dict[int, Poly] = {}
        for ka, va in self._c.items():
            for kb, vb in other._c.items():
                k = ka + kb
                d[k] = d[k] + va * vb if k in d else va * vb
        return LaurentPoly(d)

    __rmul__ = __mul__

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by ``z**k``."""
        return LaurentPoly({p + k: v for p, v in self._c.items()})

    def drop_negative(self) -> Poly:
        """Set ``z**-1 -> 0``: the ``z**0`` coefficient of a series in ``z**-1``."""
        return self[0]

    def __repr__(self):
        return f"LaurentPoly({self})"

    def __str__(self):
        if not self._c:
            return "0"
        return " + ".join(f"({v})*z^{k}" for k, v in self.items())


def _coerce(x) -> LaurentPoly:
    return x if isinstance(x, LaurentPoly) else LaurentPoly({0: x})


def miwa_shift(p: Poly, bank: Bank = Bank.T, sign: int = -1, zsign: int = 1) -> LaurentPoly:
    """``p`` with ``t_i -> t_i + sign * zsign**i * z**(-i) / i`` on ``bank``."""
    if sign not in (1, -1) or zsign not in (1, -1):
        raise ValueError("sign and zsign must be +1 or -1")

    def rule(v):
        if v.bank != bank:
            return None
        i = v.index
        return (-i, to_rat(sign * zsign ** i) / i)

    return LaurentPoly(expand_shift(p, rule))


def laurent_mul_residue(a: LaurentPoly, args, power_offset: int = 0) -> Poly:
    """Coefficient of ``z**-1`` in ``a * z**power_offset * sum_j s_j(args) z**j``.

    ``args`` is the argument vector ``(x_1, x_2, ...)`` of the elementary
    Schur polynomials, or a precomputed sequence-producing callable
    ``jmax -> [s_0, ..., s_jmax]``.
    """
    if power_offset < 0:
        raise ValueError("power_offset must be >= 0")
    lo = a.min_power()
    if lo is None:
        return Poly()
    jmax = -lo - 1 - power_offset
    if jmax < 0:
        return Poly()
    seq = args(jmax) if callable(args) else elementary_sequence(args, jmax)
    out = Poly()
    for j in range(jmax + 1):
        coef = a[-j - 1 - power_offset]
        if coef and seq[j]:
            out = out + seq[j] * coef
    return out
