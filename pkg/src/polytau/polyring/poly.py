"""Sparse multivariate polynomials with exact rational coefficients.

Variables come in three banks: the times ``t_i``, a second copy ``t'_i`` used
by bilinear identities, and free parameters ``c_{i,j}`` for symbolic
constants.  A monomial is packed into a single Python integer, one 16-bit
exponent field per variable slot, so monomial multiplication is integer
addition and the packed integers compare like a lex monomial order.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import comb, isqrt
from typing import Callable, Iterable, Iterator, Mapping

from gmpy2 import mpq

__all__ = [
    "Bank",
    "VarRef",
    "Poly",
    "Rat",
    "to_rat",
    "rat_str",
    "t",
    "tp",
    "cvar",
    "poly_arith",
    "partial_derivative",
    "shift_constants",
    "iota_c",
    "relabel",
    "expand_shift",
    "elementary_sequence",
]

Rat = type(mpq(0))

BITS = 16
MASK = (1 << BITS) - 1


def to_rat(x) -> "Rat":
    """Coerce int / Fraction / mpq / ``"p/q"`` strings to an exact rational."""
    if isinstance(x, Rat):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not coefficients")
    if isinstance(x, int):
        return mpq(x)
    if isinstance(x, Fraction):
        return mpq(x.numerator, x.denominator)
    if isinstance(x, str):
        return to_rat(Fraction(x.strip()))
    if isinstance(x, float):
        raise TypeError("floating-point coefficients are not supported")
    num = getattr(x, "numerator", None)
    den = getattr(x, "denominator", None)
    if num is not None and den is not None:
        return mpq(int(num), int(den))
    raise TypeError(f"cannot interpret {x!r} as a rational number")


def rat_str(q) -> str:
    """Canonical ``p/q`` string, always with an explicit positive denominator."""
    q = to_rat(q)
    return f"{int(q.numerator)}/{int(q.denominator)}"


class Bank(enum.IntEnum):
    T = 0
    TPRIME = 1
    C = 2


@dataclass(frozen=True, order=True)
class VarRef:
    """A single variable: ``t_index``, ``t'_index`` or ``c_{index,col}``."""

    bank: Bank
    index: int
    col: int = 0

    def __post_init__(self):
        if self.index < 1:
            raise ValueError("variable index must be >= 1")
        if self.bank == Bank.C:
            if self.col < 1:
                raise ValueError("parameter variables need a column index >= 1")
        elif self.col != 0:
            raise ValueError("only parameter variables carry a column index")

    @property
    def weight(self) -> int:
        return 0 if self.bank == Bank.C else self.index

    @property
    def slot(self) -> int:
        if self.bank == Bank.C:
            s = self.index + self.col - 2
            k = s * (s + 1) // 2 + self.col
            return 3 * (k - 1) + 2
        return 3 * (self.index - 1) + int(self.bank)

    @staticmethod
    def from_slot(slot: int) -> "VarRef":
        q, r = divmod(slot, 3)
        if r < 2:
            return VarRef(Bank(r), q + 1)
        k = q  # zero-based Cantor index
        s = (isqrt(8 * k + 1) - 1) // 2
        col = k - s * (s + 1) // 2 + 1
        return VarRef(Bank.C, s + 2 - col, col)

    def __str__(self) -> str:
        if self.bank == Bank.T:
            return f"t{self.index}"
        if self.bank == Bank.TPRIME:
            return f"t'{self.index}"
        return f"c{self.index}_{self.col}"


_SLOT_CACHE: dict[int, VarRef] = {}


def _var(slot: int) -> VarRef:
    v = _SLOT_CACHE.get(slot)
    if v is None:
        v = _SLOT_CACHE[slot] = VarRef.from_slot(slot)
    return v


def _decode(key: int) -> list[tuple[int, int]]:
    """Packed monomial -> [(slot, exponent), ...] in increasing slot order."""
    out = []
    slot = 0
    while key:
        e = key & MASK
        if e:
            out.append((slot, e))
        key >>= BITS
        slot += 1
    return out


def _unit(slot: int) -> int:
    return 1 << (BITS * slot)


def _exponent(key: int, slot: int) -> int:
    return (key >> (BITS * slot)) & MASK


def _wdeg_key(key: int) -> int:
    total = 0
    for slot, e in _decode(key):
        r = slot % 3
        if r < 2:
            total += (slot // 3 + 1) * e
    return total


class Poly:
    """Immutable sparse polynomial; ``terms`` maps packed monomials to rationals.

    Build polynomials with :func:`t`, :func:`tp`, :func:`cvar` and ordinary
    arithmetic; rational scalars mix freely with polynomials.
    """

    __slots__ = ("_t", "_hash")

    def __init__(self, terms: Mapping[int, object] | None = None):
        d = {}
        if terms:
            for k, v in terms.items():
                v = to_rat(v)
                if v:
                    d[k] = v
        self._t = d
        self._hash = None

    @classmethod
    def _raw(cls, d: dict) -> "Poly":
        # caller guarantees nonzero mpq values
        p = cls.__new__(cls)
        p._t = d
        p._hash = None
        return p

    @classmethod
    def const(cls, c) -> "Poly":
        c = to_rat(c)
        return cls._raw({0: c} if c else {})

    @classmethod
    def var(cls, v: VarRef, exponent: int = 1) -> "Poly":
        return cls._raw({exponent * _unit(v.slot): mpq(1)})

    @classmethod
    def monomial(cls, exps: Mapping[VarRef, int], coef=1) -> "Poly":
        key = 0
        for v, e in exps.items():
            if e < 0 or e > MASK:
                raise ValueError("exponent out of range")
            key += e * _unit(v.slot)
        return cls({key: coef})

    @staticmethod
    def coerce(x) -> "Poly":
        return x if isinstance(x, Poly) else Poly.const(x)

    # -- inspection ---------------------------------------------------------

    def __len__(self) -> int:
        return len(self._t)

    def __bool__(self) -> bool:
        return bool(self._t)

    def is_zero(self) -> bool:
        return not self._t

    def is_constant(self) -> bool:
        return not self._t or (len(self._t) == 1 and 0 in self._t)

    def constant_term(self) -> "Rat":
        return self._t.get(0, mpq(0))

    def items(self):
        return self._t.items()

    def variables(self) -> list[VarRef]:
        # OR of the keys is nonzero in exactly the fields some term uses
        acc = 0
        for k in self._t:
            acc |= k
        return sorted(_var(s) for s, _ in _decode(acc))

    def banks(self) -> set[Bank]:
        return {v.bank for v in self.variables()}

    def max_index(self, bank: Bank = Bank.T) -> int:
        return max((v.index for v in self.variables() if v.bank == bank), default=0)

    def wdeg(self) -> int:
        """Weighted degree, weight(t_i) = weight(t'_i) = i; -1 for zero."""
        if not self._t:
            return -1
        return max(_wdeg_key(k) for k in self._t)

    def is_weighted_homogeneous(self) -> bool:
        return len({_wdeg_key(k) for k in self._t}) <= 1

    def terms(self) -> list[tuple[tuple[tuple[VarRef, int], ...], "Rat"]]:
        """Terms in canonical order: weighted degree, then lex on the exponent
        vector read from the highest variable down."""
        decoded = [(k, _decode(k), c) for k, c in self._t.items()]
        slots = sorted({s for _, m, _ in decoded for s, _ in m},
                       key=lambda s: _var(s), reverse=True)
        pos = {s: i for i, s in enumerate(slots)}

        def sort_key(item):
            k, m, _ = item
            vec = [0] * len(slots)
            for s, e in m:
                vec[pos[s]] = e
            return (_wdeg_key(k), vec)

        decoded.sort(key=sort_key)
        out = []
        for _, m, c in decoded:
            mono = tuple(sorted(((_var(s), e) for s, e in m), key=lambda ve: ve[0]))
            out.append((mono, c))
        return out

    def leading_coefficient(self) -> "Rat":
        """Coefficient of the last term in canonical order."""
        if not self._t:
            return mpq(0)
        return self.terms()[-1][1]

    def coefficient(self, exps: Mapping[VarRef, int]) -> "Rat":
        key = sum(e * _unit(v.slot) for v, e in exps.items())
        return self._t.get(key, mpq(0))

    # -- arithmetic ---------------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self._t == other._t
        try:
            c = to_rat(other)
        except TypeError:
            return NotImplemented
        return self._t == ({0: c} if c else {})

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._t.items()))
        return self._hash

    def __neg__(self) -> "Poly":
        return Poly._raw({k: -v for k, v in self._t.items()})

    def __pos__(self) -> "Poly":
        return self

    def _combine(self, other, sign: int) -> "Poly":
        if not isinstance(other, Poly):
            other = Poly.const(other)
        d = dict(self._t)
        get = d.get
        for k, v in other._t.items():
            nv = get(k, 0) + v if sign > 0 else get(k, 0) - v
            if nv:
                d[k] = nv
            else:
                d.pop(k, None)
        return Poly._raw(d)

    def __add__(self, other):
        return self._combine(other, 1)

    __radd__ = __add__

    def __sub__(self, other):
        return self._combine(other, -1)

    def __rsub__(self, other):
        return Poly.coerce(other)._combine(self, -1)

    def scale(self, c) -> "Poly":
        c = to_rat(c)
        if not c:
            return Poly._raw({})
        return Poly._raw({k: v * c for k, v in self._t.items()})

    def __mul__(self, other):
        if not isinstance(other, Poly):
            try:
                return self.scale(other)
            except TypeError:
                return NotImplemented
        a, b = self._t, other._t
        if not a or not b:
            return Poly._raw({})
        if len(a) < len(b):
            a, b = b, a
        if len(b) == 1:
            (kb, cb), = b.items()
            return Poly._raw({ka + kb: ca * cb for ka, ca in a.items()})
        out: dict = {}
        get = out.get
        for kb, cb in b.items():
            for ka, ca in a.items():
                k = ka + kb
                out[k] = get(k, 0) + ca * cb
        return Poly._raw({k: v for k, v in out.items() if v})

    def __rmul__(self, other):
        return self.scale(other)

    def __truediv__(self, other):
        if isinstance(other, Poly):
            return self.exact_div(other)
        c = to_rat(other)
        if not c:
            raise ZeroDivisionError("division of a polynomial by zero")
        return self.scale(1 / c)

    def __pow__(self, n: int) -> "Poly":
        if n < 0:
            raise ValueError("negative powers are not polynomials")
        result = Poly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def exact_div(self, other: "Poly") -> "Poly":
        """Exact quotient; raises ``StructuralError`` if ``other`` does not divide."""
        from ..errors import StructuralError

        if not other._t:
            raise StructuralError("division by the zero polynomial")
        if not self._t:
            return self
        lk = max(other._t)
        lc = other._t[lk]
        lfields = _decode(lk)
        rem = dict(self._t)
        quot: dict = {}
        while rem:
            k = max(rem)
            for s, e in lfields:
                if _exponent(k, s) < e:
                    raise StructuralError("polynomial division is not exact")
            qk = k - lk
            qc = rem[k] / lc
            quot[qk] = qc
            for bk, bc in other._t.items():
                kk = qk + bk
                nv = rem.get(kk, 0) - qc * bc
                if nv:
                    rem[kk] = nv
                else:
                    rem.pop(kk, None)
        return Poly._raw(quot)

    # -- calculus and substitution -----------------------------------------

    def diff(self, v: VarRef, times: int = 1) -> "Poly":
        p = self
        for _ in range(times):
            p = partial_derivative(p, v)
        return p

    def map_coefficients(self, fn: Callable[[int, "Rat"], "Rat"]) -> "Poly":
        """Rebuild with ``fn(packed_key, coef)``; zero results are dropped."""
        d = {}
        for k, c in self._t.items():
            nc = fn(k, c)
            if nc:
                d[k] = nc
        return Poly._raw(d)

    def evaluate(self, values: Mapping[VarRef, object]) -> "Poly":
        """Substitute rational (or polynomial) values for some variables."""
        subs = {v.slot: Poly.coerce(x) for v, x in values.items()}
        return _substitute(self, subs)

    def __repr__(self) -> str:
        return f"Poly({self})"

    def __str__(self) -> str:
        if not self._t:
            return "0"
        parts = []
        for mono, c in self.terms():
            body = "*".join(str(v) if e == 1 else f"{v}^{e}" for v, e in mono)
            if not body:
                s = str(c)
            elif c == 1:
                s = body
            elif c == -1:
                s = "-" + body
            else:
                s = f"{c}*{body}"
            parts.append(s)
        return " + ".join(parts).replace("+ -", "- ")


def t(i: int, exponent: int = 1) -> Poly:
    return Poly.var(VarRef(Bank.T, i), exponent)


def tp(i: int, exponent: int = 1) -> Poly:
    return Poly.var(VarRef(Bank.TPRIME, i), exponent)


def cvar(i: int, j: int, exponent: int = 1) -> Poly:
    """Symbolic constant ``c_{i,j}`` (row ``i``, column ``j``)."""
    return Poly.var(VarRef(Bank.C, i, j), exponent)


def poly_arith(a: Poly, b: Poly, op: str) -> Poly:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown operation {op!r}")


def partial_derivative(p: Poly, v: VarRef) -> Poly:
    s = v.slot
    unit = _unit(s)
    shift = BITS * s
    d = {}
    for k, c in p._t.items():
        e = (k >> shift) & MASK
        if e:
            d[k - unit] = c * e
    return Poly._raw(d)


def _substitute(p: Poly, subs: dict[int, Poly]) -> Poly:
    """Replace variable slots by polynomials (power-cached)."""
    if not subs:
        return p
    powers: dict[tuple[int, int], Poly] = {}

    def power(slot, e):
        key = (slot, e)
        r = powers.get(key)
        if r is None:
            r = subs[slot] if e == 1 else power(slot, e - 1) * subs[slot]
            powers[key] = r
        return r

    out: dict = {}
    for k, c in p._t.items():
        fixed = k
        factors = []
        for s, e in _decode(k):
            if s in subs:
                fixed -= e * _unit(s)
                factors.append(power(s, e))
        term = Poly._raw({fixed: c})
        for f in factors:
            term = term * f
        for kk, cc in term._t.items():
            out[kk] = out.get(kk, 0) + cc
    return Poly._raw({k: v for k, v in out.items() if v})


def expand_shift(p: Poly, rule: Callable[[VarRef], tuple[int, object] | None]) -> dict[int, Poly]:
    """Substitute ``x -> x + alpha * w**step`` for every variable ``x`` where
    ``rule(x) = (step, alpha)`` with rational ``alpha``; returns ``{power of w: Poly}``.
    """
    cache: dict[int, tuple[int, "Rat"] | None] = {}
    out: dict[int, dict] = {}
    for k, c in p._t.items():
        partial = [(0, k, c)]
        for s, e in _decode(k):
            if s not in cache:
                r = rule(_var(s))
                cache[s] = None if r is None else (r[0], to_rat(r[1]))
            r = cache[s]
            if r is None:
                continue
            step, alpha = r
            unit = _unit(s)
            nxt = []
            apow = mpq(1)
            for j in range(e + 1):
                f = comb(e, j) * apow
                dk = j * unit
                dw = j * step
                for wp, kk, cc in partial:
                    nxt.append((wp + dw, kk - dk, cc * f))
                apow = apow * alpha
            partial = nxt
        for wp, kk, cc in partial:
            bucket = out.setdefault(wp, {})
            bucket[kk] = bucket.get(kk, 0) + cc
    result = {}
    for wp, bucket in out.items():
        q = Poly._raw({k: v for k, v in bucket.items() if v})
        if q:
            result[wp] = q
    return result


def shift_constants(p: Poly, bank: Bank, c: Iterable) -> Poly:
    """``t_i -> t_i + c_i`` on one bank; ``c`` is 1-indexed, missing entries are 0."""
    offsets = {}
    for i, ci in enumerate(c, start=1):
        ci = Poly.coerce(ci)
        if ci:
            offsets[VarRef(bank, i).slot] = ci
    if all(o.is_constant() for o in offsets.values()):
        # rational shifts: binomial expansion, no polynomial products
        consts = {s: o.constant_term() for s, o in offsets.items()}
        return expand_shift(p, lambda v: (0, consts[v.slot]) if v.slot in consts else None).get(0, Poly())
    subs = {s: Poly.var(_var(s)) + o for s, o in offsets.items()}
    return _substitute(p, subs)


def iota_c(p: Poly, bank: Bank = Bank.T) -> Poly:
    """``t_i -> (-1)**(i+1) t_i`` on one bank: even-indexed variables change sign."""
    b = int(bank)

    def flip(k, c):
        neg = False
        for s, e in _decode(k):
            if s % 3 == b and (s // 3) % 2 == 1 and e % 2 == 1:
                neg = not neg
        return -c if neg else c

    return p.map_coefficients(flip)


def relabel(p: Poly, src: Bank, dst: Bank) -> Poly:
    """Rename every ``src`` variable to the ``dst`` variable with the same index."""
    if src == dst:
        return p
    if Bank.C in (src, dst):
        raise ValueError("only the time banks can be relabelled")
    delta = int(dst) - int(src)
    vs = p.variables()
    if all(v.bank == src for v in vs):
        if delta > 0:
            return Poly._raw({k << (BITS * delta): c for k, c in p._t.items()})
        return Poly._raw({k >> (BITS * -delta): c for k, c in p._t.items()})
    d = {}
    for k, c in p._t.items():
        nk = k
        for s, e in _decode(k):
            if s % 3 == int(src):
                nk += e * (_unit(s + delta) - _unit(s))
            elif s % 3 == int(dst):
                raise ValueError("destination bank already in use")
        d[nk] = c
    return Poly._raw(d)


def elementary_sequence(xs, jmax: int) -> list[Poly]:
    """``[s_0, ..., s_jmax]`` for arguments ``xs = (x_1, x_2, ...)``.

    Uses ``j s_j = sum_{i=1}^{j} i x_i s_{j-i}``; missing ``x_i`` are zero.
    """
    xs = [Poly.coerce(x) for x in xs]
    seq = [Poly.const(1)]
    for j in range(1, jmax + 1):
        acc = Poly()
        for i in range(1, min(j, len(xs)) + 1):
            xi = xs[i - 1]
            if xi and seq[j - i]:
                acc = acc + (xi * seq[j - i]).scale(i)
        seq.append(acc.scale(mpq(1, j)))
    return seq
