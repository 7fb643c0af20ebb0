"""Elementary Schur polynomials, Schur polynomials and the hook blocks used by
the Giambelli-type and Pfaffian constructions."""

from __future__ import annotations

import threading
from collections import OrderedDict
from dataclasses import dataclass, field
from typing import Iterable

from gmpy2 import mpq

from .partitions import Partition
from .errors import ParameterError
from .polyring import Bank, Poly, VarRef, det_poly, elementary_sequence, to_rat
from .polyring.poly import _decode

__all__ = [
    "ArgSpec",
    "elementary_schur",
    "schur_sequence",
    "schur_jt",
    "chi",
    "chibar",
    "clear_cache",
    "schur_coefficients",
]


@dataclass(frozen=True)
class ArgSpec:
    """Argument vector ``(x_1, x_2, ...)`` of the elementary Schur polynomials.

    In bank mode ``x_i = scale * sign * (t_i + shift_i)`` where ``t_i`` lives in
    ``bank`` (and is dropped for even ``i`` when ``odd_only``).  In explicit
    mode ``x_i = explicit[i-1]`` and zero beyond.
    """

    bank: Bank | None = Bank.T
    sign: int = 1
    shift: tuple = ()
    scale: object = 1
    explicit: tuple | None = None
    odd_only: bool = False
    _key: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if (self.bank is None) == (self.explicit is None):
            raise ValueError("exactly one of bank and explicit must be given")
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        shift = [Poly.coerce(x) for x in self.shift]
        while shift and not shift[-1]:
            shift.pop()
        object.__setattr__(self, "shift", tuple(shift))
        object.__setattr__(self, "scale", to_rat(self.scale))
        if self.explicit is not None:
            ex = [Poly.coerce(x) for x in self.explicit]
            while ex and not ex[-1]:
                ex.pop()
            object.__setattr__(self, "explicit", tuple(ex))
        object.__setattr__(
            self, "_key",
            (self.bank, self.sign, self.shift, self.scale, self.explicit, self.odd_only),
        )

    def __hash__(self):
        return hash(self._key)

    def __eq__(self, other):
        return isinstance(other, ArgSpec) and self._key == other._key

    @classmethod
    def times(cls, bank: Bank = Bank.T, shift: Iterable = (), sign: int = 1,
              odd_only: bool = False) -> "ArgSpec":
        return cls(bank=bank, sign=sign, shift=tuple(shift), odd_only=odd_only)

    @classmethod
    def of(cls, xs: Iterable) -> "ArgSpec":
        return cls(bank=None, explicit=tuple(xs))

    def negated(self) -> "ArgSpec":
        if self.explicit is not None:
            return ArgSpec.of(-x for x in self.explicit)
        return ArgSpec(self.bank, -self.sign, self.shift, self.scale, None, self.odd_only)

    def arg(self, i: int) -> Poly:
        if self.explicit is not None:
            return self.explicit[i - 1] if i <= len(self.explicit) else Poly()
        x = Poly() if (self.odd_only and i % 2 == 0) else Poly.var(VarRef(self.bank, i))
        if i <= len(self.shift):
            x = x + self.shift[i - 1]
        f = self.scale * self.sign
        return x if f == 1 else x.scale(f)

    def resolve(self, n: int) -> list[Poly]:
        return [self.arg(i) for i in range(1, n + 1)]


_CACHE_SIZE = 512
_cache: "OrderedDict[ArgSpec, list[Poly]]" = OrderedDict()
_lock = threading.Lock()


def clear_cache() -> None:
    with _lock:
        _cache.clear()


def schur_sequence(jmax: int, args: ArgSpec) -> list[Poly]:
    """``[s_0, ..., s_jmax]`` for ``args``, cached per argument spec."""
    if jmax < 0:
        return []
    with _lock:
        seq = _cache.get(args)
        if seq is not None:
            _cache.move_to_end(args)
    if seq is None or len(seq) <= jmax:
        seq = elementary_sequence(args.resolve(jmax), jmax)
        with _lock:
            old = _cache.get(args)
            if old is None or len(old) < len(seq):
                _cache[args] = seq
            _cache.move_to_end(args)
            while len(_cache) > _CACHE_SIZE:
                _cache.popitem(last=False)
    return seq[: jmax + 1]


def elementary_schur(j: int, args: ArgSpec | None = None) -> Poly:
    """Coefficient of ``z**j`` in ``exp(sum_i x_i z**i)``; zero for ``j < 0``."""
    if j < 0:
        return Poly()
    if args is None:
        args = ArgSpec.times()
    return schur_sequence(j, args)[j]


def schur_jt(lam: Iterable[int], args: ArgSpec | None = None) -> Poly:
    """``det(s_{lam_i + j - i})`` with a common argument spec."""
    lam = Partition(lam)
    if args is None:
        args = ArgSpec.times()
    ell = len(lam)
    if not ell:
        return Poly.const(1)
    seq = schur_sequence(lam[0] + ell - 1, args)

    def s(k):
        return seq[k] if k >= 0 else Poly()

    return det_poly([[s(lam[i] + j - i) for j in range(ell)] for i in range(ell)])


def chi(a: int, b: int, first: ArgSpec, second: ArgSpec) -> Poly:
    """Hook block ``(-1)**b sum_{n=0}^{b} s_{n+a+1}(first) s_{b-n}(-second)``."""
    if a < 0 or b < 0:
        raise ValueError("hook coordinates must be >= 0")
    p = schur_sequence(a + b + 1, first)
    q = schur_sequence(b, second.negated())
    acc = Poly()
    for n in range(b + 1):
        if p[n + a + 1] and q[b - n]:
            acc = acc + p[n + a + 1] * q[b - n]
    return -acc if b % 2 else acc


def chibar(M: int, N: int, first: ArgSpec, second: ArgSpec) -> Poly:
    """``(-1)**N (s_M(first) s_N(-second) / 2 + sum_{k=1}^{N} s_{M+k}(first) s_{N-k}(-second))``."""
    if M < 0 or N < 0:
        raise ValueError("indices must be >= 0")
    p = schur_sequence(M + N, first)
    q = schur_sequence(N, second.negated())
    acc = (p[M] * q[N]).scale(mpq(1, 2))
    for k in range(1, N + 1):
        if p[M + k] and q[N - k]:
            acc = acc + p[M + k] * q[N - k]
    return -acc if N % 2 else acc


# Partitions are handled below as Maya diagrams packed into an int: bit
# lam_i - i + L is set for i = 1..L, and every position below 0 is implicitly
# occupied.  Multiplication by the power sum p_k moves one particle up by k
# (Murnaghan-Nakayama), with sign given by the particles jumped over.


def maya_mask(lam, L: int) -> int:
    lam = list(lam)
    if len(lam) > L:
        raise ValueError("offset too small for this partition")
    lam += [0] * (L - len(lam))
    m = 0
    for i, p in enumerate(lam, start=1):
        m |= 1 << (p - i + L)
    return m


def maya_partition(m: int, L: int) -> Partition:
    parts = []
    i = 0
    for pos in range(m.bit_length() - 1, -1, -1):
        if m >> pos & 1:
            i += 1
            part = pos - L + i
            if part <= 0:
                break
            parts.append(part)
    return Partition(parts)


def _times_power_sum(vec: dict, k: int) -> dict:
    out: dict = {}
    between = (1 << (k - 1)) - 1
    for m, c in vec.items():
        movable = m & ~(m >> k)
        while movable:
            low = movable & -movable
            movable ^= low
            j = low.bit_length() - 1
            nm = m ^ low ^ (low << k)
            v = out.get(nm, 0) + (-c if ((m >> (j + 1)) & between).bit_count() & 1 else c)
            if v:
                out[nm] = v
            else:
                out.pop(nm, None)
    return out


def _t_exponents(p: Poly) -> dict:
    out = {}
    for key, c in p.items():
        e = []
        for slot, x in _decode(key):
            if slot % 3 != int(Bank.T):
                raise ParameterError("Schur expansion needs a polynomial in the t bank only")
            e.append((slot // 3 + 1, x))
        out[tuple(e)] = c
    return out


def schur_masks(p: Poly) -> tuple[dict, int]:
    """Schur-basis coefficients of ``p`` keyed by Maya masks, plus the offset ``L``."""
    terms = _t_exponents(p)
    nvars = max((i for e in terms for i, _ in e), default=0)
    L = p.wdeg() + nvars + 2 if p else 1
    vacuum = (1 << L) - 1

    def build(terms, var):
        if var == 0:
            c = terms.get((), 0)
            return {vacuum: c} if c else {}
        groups: dict = {}
        for e, c in terms.items():
            if e and e[-1][0] == var:
                groups.setdefault(e[-1][1], {})[e[:-1]] = c
            else:
                groups.setdefault(0, {})[e] = c
        inv = mpq(1, var)
        res: dict = {}
        # Horner in t_var = p_var / var
        for j in range(max(groups), -1, -1):
            if res:
                res = {m: c * inv for m, c in _times_power_sum(res, var).items()}
            if j in groups:
                for m, c in build(groups[j], var - 1).items():
                    v = res.get(m, 0) + c
                    if v:
                        res[m] = v
                    else:
                        res.pop(m, None)
        return res

    return build(terms, nvars), L


def schur_coefficients(p: Poly) -> dict[Partition, object]:
    """Expansion ``p = sum_lam xi_lam s_lam(t)``; zero coefficients omitted."""
    masks, L = schur_masks(p)
    return {maya_partition(m, L): c for m, c in masks.items()}
