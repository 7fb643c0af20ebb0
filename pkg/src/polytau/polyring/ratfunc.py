"""Quotients of polynomials, enough for logarithmic-derivative PDE checks."""

from __future__ import annotations

from ..errors import StructuralError
from .poly import Poly, VarRef, partial_derivative

__all__ = ["RatFunc"]


class RatFunc:
    """``num / den`` with ``den`` nonzero and positive leading coefficient.

    No gcd reduction is attempted; equality is decided by cross-multiplication.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=1):
        num = Poly.coerce(num)
        den = Poly.coerce(den)
        if not den:
            raise StructuralError("rational function with zero denominator")
        lc = den.leading_coefficient()
        if lc < 0:
            num, den = -num, -den
        self.num = num
        self.den = den

    @staticmethod
    def coerce(x) -> "RatFunc":
        return x if isinstance(x, RatFunc) else RatFunc(x)

    def is_zero(self) -> bool:
        return not self.num

    def __eq__(self, other):
        if not isinstance(other, RatFunc):
            try:
                other = RatFunc(other)
            except TypeError:
                return NotImplemented
        if self.den == other.den:
            return self.num == other.num
        return self.num * other.den == other.num * self.den

    def __hash__(self):
        # cross-multiplication equality admits no cheap canonical hash
        raise TypeError("RatFunc is unhashable")

    def __neg__(self):
        return RatFunc(-self.num, self.den)

    def __add__(self, other):
        other = RatFunc.coerce(other)
        if self.den == other.den:
            return RatFunc(self.num + other.num, self.den)
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-RatFunc.coerce(other))

    def __rsub__(self, other):
        return RatFunc.coerce(other) - self

    def __mul__(self, other):
        other = RatFunc.coerce(other)
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = RatFunc.coerce(other)
        if not other.num:
            raise StructuralError("division by the zero rational function")
        return RatFunc(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return RatFunc.coerce(other) / self

    def diff(self, v: VarRef) -> "RatFunc":
        """Quotient rule: ``(n' d - n d') / d**2``."""
        dn = partial_derivative(self.num, v)
        dd = partial_derivative(self.den, v)
        if not dd:
            return RatFunc(dn, self.den)
        return RatFunc(dn * self.den - self.num * dd, self.den * self.den)

    def __repr__(self):
        return f"RatFunc(({self.num}) / ({self.den}))"
