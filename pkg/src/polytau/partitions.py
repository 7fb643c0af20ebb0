"""Partition combinatorics: Frobenius coordinates, conjugation, periodicity."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import ParameterError

__all__ = [
    "Partition",
    "FrobeniusCoords",
    "to_frobenius",
    "from_frobenius",
    "conjugate",
    "is_self_conjugate",
    "is_n_periodic",
    "check_reduced_admissible",
    "admissibility_violation",
    "enumerate_3periodic",
    "hook",
    "partitions_of",
    "partitions_up_to",
    "is_strict",
]


class Partition(tuple):
    """Weakly decreasing tuple of positive parts; trailing zeros are dropped."""

    def __new__(cls, parts: Iterable[int] = ()):
        parts = [int(p) for p in parts]
        while parts and parts[-1] == 0:
            parts.pop()
        for p in parts:
            if p < 0:
                raise ParameterError(f"negative part in partition {parts}")
        for x, y in zip(parts, parts[1:]):
            if x < y:
                raise ParameterError(f"parts must be weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def __repr__(self):
        return f"Partition({list(self)})"


@dataclass(frozen=True)
class FrobeniusCoords:
    """``(a_1, ..., a_k | b_1, ..., b_k)`` with both lists strictly decreasing."""

    a: tuple[int, ...] = ()
    b: tuple[int, ...] = ()

    def __post_init__(self):
        a = tuple(int(x) for x in self.a)
        b = tuple(int(x) for x in self.b)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        if len(a) != len(b):
            raise ParameterError("Frobenius lists must have equal length")
        for seq in (a, b):
            if any(x < 0 for x in seq):
                raise ParameterError("Frobenius coordinates must be >= 0")
            if any(x <= y for x, y in zip(seq, seq[1:])):
                raise ParameterError("Frobenius coordinates must be strictly decreasing")

    @classmethod
    def self_conjugate(cls, a: Iterable[int]) -> "FrobeniusCoords":
        a = tuple(a)
        return cls(a, a)

    @property
    def rank(self) -> int:
        return len(self.a)

    def is_self_conjugate(self) -> bool:
        return self.a == self.b

    def __str__(self):
        return f"({','.join(map(str, self.a))}|{','.join(map(str, self.b))})"


def conjugate(lam: Iterable[int]) -> Partition:
    lam = Partition(lam)
    if not lam:
        return lam
    return Partition(sum(1 for p in lam if p > j) for j in range(lam[0]))


def to_frobenius(lam: Iterable[int]) -> FrobeniusCoords:
    lam = Partition(lam)
    conj = conjugate(lam)
    k = sum(1 for i, p in enumerate(lam) if p > i)
    return FrobeniusCoords(
        tuple(lam[j] - j - 1 for j in range(k)),
        tuple(conj[j] - j - 1 for j in range(k)),
    )


def from_frobenius(f: FrobeniusCoords) -> Partition:
    k = f.rank
    rows = []
    for i in range(k):
        rows.append(f.a[i] + i + 1)
    # rows below the diagonal block come from the legs
    depth = f.b[0] + 1 if k else 0
    for r in range(k, depth):
        rows.append(sum(1 for j in range(k) if f.b[j] + j >= r))
    return Partition(rows)


def is_self_conjugate(lam: Iterable[int]) -> bool:
    lam = Partition(lam)
    return conjugate(lam) == lam


def is_n_periodic(lam: Iterable[int], n: int) -> bool:
    """True iff ``V - n`` is contained in ``V = {lam_i - i} u {-l-1, -l-2, ...}``."""
    if n < 2:
        raise ParameterError("n must be >= 2")
    lam = Partition(lam)
    ell = len(lam)
    finite = {p - i for i, p in enumerate(lam, start=1)}
    # the tail below -l maps into itself; only the finite part needs checking
    return all(v - n < -ell or v - n in finite for v in finite)


def admissibility_violation(a: Iterable[int], n: int) -> str | None:
    """Description of the first violated admissibility condition, or None."""
    a = tuple(a)
    aset = set(a)
    for x in a:
        if x - n >= 0 and x - n not in aset:
            return f"condition (i): a={x} but a-n={x - n} is not in A"
    for x in a:
        for y in a:
            if (x + y + 1) % n == 0:
                return f"condition (ii): a_i + a_j + 1 = {x + y + 1} is a multiple of {n}"
    return None


def check_reduced_admissible(f, n: int) -> bool:
    """Both conditions on ``A = {a_1, ..., a_k}`` for an ``n``-reduced CKP tau."""
    if n < 2:
        raise ParameterError("n must be >= 2")
    a = f.a if isinstance(f, FrobeniusCoords) else tuple(f)
    return admissibility_violation(a, n) is None


def enumerate_3periodic(m: int) -> tuple[FrobeniusCoords, FrobeniusCoords]:
    """The two self-conjugate 3-periodic families for a given ``m >= 0``."""
    if m < 0:
        raise ParameterError("m must be >= 0")
    fam1 = tuple(3 * i for i in range(m, -1, -1))
    fam2 = tuple(3 * i + 2 for i in range(m, -1, -1))
    return FrobeniusCoords.self_conjugate(fam1), FrobeniusCoords.self_conjugate(fam2)


def hook(i: int, j: int) -> Partition:
    """The hook ``(i + 1, 1^j)``, which is ``(i | j)`` in Frobenius form."""
    if i < 0 or j < 0:
        raise ParameterError("hook arm and leg must be >= 0")
    return Partition((i + 1,) + (1,) * j)


def partitions_of(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of ``n`` in reverse lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield Partition()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions_of(n - first, first):
            yield Partition((first,) + tuple(rest))


def partitions_up_to(bound: int = 12) -> Iterator[Partition]:
    for n in range(bound + 1):
        yield from partitions_of(n)


def is_strict(parts: Iterable[int]) -> bool:
    parts = list(parts)
    return all(x > y for x, y in zip(parts, parts[1:])) and all(p >= 0 for p in parts)
