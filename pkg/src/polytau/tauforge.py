"""Constructors for polynomial tau-functions of the KP, CKP, reduced CKP and BKP
hierarchies, and resolution of the constraints on their constants."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from gmpy2 import mpq

from .errors import ConsistencyError, ConstraintViolation, ParameterError
from .partitions import (
    FrobeniusCoords,
    Partition,
    admissibility_violation,
    from_frobenius,
    is_strict,
    to_frobenius,
)
from .polyring import Bank, Poly, cvar, det_poly, iota_c, pfaffian_poly
from .polyring.linalg import check_antisymmetric
from .schur import ArgSpec, chi, chibar, elementary_schur, schur_sequence

__all__ = [
    "Family",
    "ConstMatrix",
    "TauPoly",
    "tau_kp_jt",
    "tau_kp_giambelli",
    "resolve_ckp_constraints",
    "ckp_constraint_residuals",
    "tau_ckp",
    "tau_ckp_tmatrix",
    "tau_ckp_reduced",
    "solve_reduced_constraints",
    "reduced_constraint_residuals",
    "tau_bkp",
    "bkp_matrix",
    "bkp_square_partition",
    "iota_vector",
    "shape_kp_jt",
    "shape_giambelli",
    "shape_ckp",
    "shape_reduced",
]


class Family(enum.Enum):
    KP_JT = "kp-jt"
    KP_GIAMBELLI = "kp-giambelli"
    CKP = "ckp"
    CKP_REDUCED = "ckp-reduced"
    BKP = "bkp"


def _trim(col) -> tuple[Poly, ...]:
    col = [Poly.coerce(x) for x in col]
    while col and not col[-1]:
        col.pop()
    return tuple(col)


@dataclass(frozen=True)
class ConstMatrix:
    """Columns of free constants; ``columns[j-1][i-1]`` is ``c_{i,j}``.

    Entries are rationals or, for symbolic work, polynomials in the parameter
    bank.  Missing entries and missing columns read as zero.
    """

    columns: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "columns", tuple(_trim(c) for c in self.columns))

    @classmethod
    def zero(cls) -> "ConstMatrix":
        return cls(())

    @classmethod
    def symbolic(cls, lengths: Sequence[int]) -> "ConstMatrix":
        """Column ``j`` filled with the parameter variables ``c_{1,j}, ..., c_{L_j,j}``."""
        return cls(tuple(tuple(cvar(i, j) for i in range(1, L + 1))
                         for j, L in enumerate(lengths, start=1)))

    def column(self, j: int) -> tuple[Poly, ...]:
        """Column ``j`` (1-based), trailing zeros trimmed."""
        return self.columns[j - 1] if 1 <= j <= len(self.columns) else ()

    def entry(self, i: int, j: int) -> Poly:
        col = self.column(j)
        return col[i - 1] if 1 <= i <= len(col) else Poly()

    def with_entry(self, i: int, j: int, value) -> "ConstMatrix":
        cols = [list(c) for c in self.columns]
        while len(cols) < j:
            cols.append([])
        col = cols[j - 1]
        while len(col) < i:
            col.append(Poly())
        col[i - 1] = Poly.coerce(value)
        return ConstMatrix(tuple(tuple(c) for c in cols))

    @property
    def ncols(self) -> int:
        return len(self.columns)

    def is_zero(self) -> bool:
        return not any(self.columns)

    def is_numeric(self) -> bool:
        return all(x.is_constant() for c in self.columns for x in c)

    def check_shape(self, bounds: Sequence[int], what: str = "c") -> None:
        if len(self.columns) > len(bounds) and any(self.columns[len(bounds):]):
            raise ParameterError(f"{what} has {len(self.columns)} columns, at most {len(bounds)} allowed")
        for j, (col, bound) in enumerate(zip(self.columns, bounds), start=1):
            if len(col) > bound:
                raise ParameterError(
                    f"{what} column {j} has {len(col)} entries, at most {bound} allowed")


@dataclass(frozen=True)
class TauPoly:
    """A constructed tau-function together with the data that produced it."""

    poly: Poly
    family: Family
    lam: object
    constants: ConstMatrix = field(default_factory=ConstMatrix)
    d: ConstMatrix | None = None
    n: int | None = None

    def __post_init__(self):
        if not self.poly:
            raise ConsistencyError("constructed tau-function is zero")
        if Bank.TPRIME in self.poly.banks():
            raise ConsistencyError("tau-function must not involve the t' bank")


def iota_vector(col: Iterable) -> tuple[Poly, ...]:
    """``(c_1, -c_2, c_3, -c_4, ...)``."""
    return tuple(x if i % 2 else -x for i, x in enumerate((Poly.coerce(y) for y in col), start=1))


# ---------------------------------------------------------------- shapes

def shape_kp_jt(lam) -> list[int]:
    lam = Partition(lam)
    ell = len(lam)
    return [lam[j - 1] - j + ell for j in range(1, ell + 1)]


def shape_giambelli(f: FrobeniusCoords) -> tuple[list[int], list[int]]:
    b1 = f.b[0] if f.rank else 0
    return [a + b1 + 1 for a in f.a], list(f.b)


def shape_ckp(a: Sequence[int]) -> list[int]:
    return [aj + a[0] + 1 for aj in a] if a else []


def shape_reduced(n: int, a: Sequence[int]) -> dict[int, int]:
    """Allowed length per congruence class: ``m + a_1 + 1`` with ``m`` the largest a in the class."""
    out: dict[int, int] = {}
    for x in a:
        r = x % n
        out[r] = max(out.get(r, -1), x + a[0] + 1)
    return out


def _as_frobenius(f) -> FrobeniusCoords:
    if isinstance(f, FrobeniusCoords):
        return f
    raise ParameterError("expected FrobeniusCoords")


def _strictly_decreasing(a) -> tuple[int, ...]:
    a = tuple(int(x) for x in a)
    if any(x < 0 for x in a) or any(x <= y for x, y in zip(a, a[1:])):
        raise ParameterError(f"expected a strictly decreasing list of integers >= 0, got {list(a)}")
    return a


# ---------------------------------------------------------------- KP

def tau_kp_jt(lam, c: ConstMatrix | None = None) -> TauPoly:
    """``det(s_{lam_j + i - j}(t + c_j))``, constants attached to columns."""
    lam = Partition(lam)
    c = c or ConstMatrix.zero()
    c.check_shape(shape_kp_jt(lam))
    ell = len(lam)
    cols = []
    for j in range(1, ell + 1):
        seq = schur_sequence(lam[j - 1] + ell - j, ArgSpec.times(shift=c.column(j)))
        cols.append(seq)

    def entry(i, j):
        k = lam[j - 1] + i - j
        return cols[j - 1][k] if k >= 0 else Poly()

    m = [[entry(i, j) for j in range(1, ell + 1)] for i in range(1, ell + 1)]
    return TauPoly(det_poly(m), Family.KP_JT, lam, c)


def giambelli_matrix(f: FrobeniusCoords, c: ConstMatrix, d_cols: Sequence) -> list[list[Poly]]:
    k = f.rank
    firsts = [ArgSpec.times(shift=c.column(i)) for i in range(1, k + 1)]
    seconds = [ArgSpec.times(shift=d_cols[j]) for j in range(k)]
    return [[chi(f.a[i], f.b[j], firsts[i], seconds[j]) for j in range(k)] for i in range(k)]


def tau_kp_giambelli(f: FrobeniusCoords, c: ConstMatrix | None = None,
                     d: ConstMatrix | None = None) -> TauPoly:
    """``det(chi_{(a_i|b_j)}(t + c_i; t + d_j))``."""
    f = _as_frobenius(f)
    c = c or ConstMatrix.zero()
    d = d or ConstMatrix.zero()
    cb, db = shape_giambelli(f)
    c.check_shape(cb, "c")
    d.check_shape(db, "d")
    m = giambelli_matrix(f, c, [d.column(j) for j in range(1, f.rank + 1)])
    return TauPoly(det_poly(m), Family.KP_GIAMBELLI, f, c, d)


# ---------------------------------------------------------------- CKP

def _restrict_value(ci: Sequence[Poly], cj: Sequence[Poly], N: int) -> Poly:
    """``s_N(c_i - iota(c_j))`` with the ``N``-th argument of column ``j`` omitted."""
    xs = []
    for m in range(1, N + 1):
        x = ci[m - 1] if m <= len(ci) else Poly()
        if m < N and m <= len(cj):
            x = x + cj[m - 1] if m % 2 == 0 else x - cj[m - 1]
        xs.append(x)
    return elementary_schur(N, ArgSpec.of(xs))


def ckp_constraint_residuals(a, c: ConstMatrix) -> dict[tuple[int, int], Poly]:
    """Nonzero values of ``s_{a_i+a_j+1}(c_i - iota(c_j))`` over ``i < j``."""
    a = _strictly_decreasing(a)
    out = {}
    for j in range(1, len(a) + 1):
        for i in range(1, j):
            N = a[i - 1] + a[j - 1] + 1
            xs = [c.entry(m, i) + (c.entry(m, j) if m % 2 == 0 else -c.entry(m, j))
                  for m in range(1, N + 1)]
            r = elementary_schur(N, ArgSpec.of(xs))
            if r:
                out[(i, j)] = r
    return out


def resolve_ckp_constraints(a, c: ConstMatrix) -> ConstMatrix:
    """Overwrite ``c_{a_i+a_j+1, j}`` (``i < j``) so that every constraint holds.

    Columns are processed left to right and, inside a column, constrained rows
    in ascending order, so each right-hand side only uses final values.
    """
    a = _strictly_decreasing(a)
    k = len(a)
    for j in range(2, k + 1):
        # ascending N = a_i + a_j + 1 means descending i
        for i in range(j - 1, 0, -1):
            N = a[i - 1] + a[j - 1] + 1
            ci = c.column(i)
            cj = c.column(j)
            v = _restrict_value(ci, cj, N)
            # s_N(x) = x_N + (terms without x_N); x_N = c_{N,i} + (-1)^N c_{N,j}
            val = v if N % 2 == 1 else -v
            c = c.with_entry(N, j, val)
    if ckp_constraint_residuals(a, c):
        raise ConsistencyError("constraint resolution left nonzero residuals")
    return c


def ckp_matrix(a: Sequence[int], c: ConstMatrix) -> list[list[Poly]]:
    k = len(a)
    firsts = [ArgSpec.times(shift=c.column(i)) for i in range(1, k + 1)]
    seconds = [ArgSpec.times(shift=iota_vector(c.column(j))) for j in range(1, k + 1)]
    return [[chi(a[i], a[j], firsts[i], seconds[j]) for j in range(k)] for i in range(k)]


def tau_ckp(a, c: ConstMatrix | None = None, resolve: bool = True) -> TauPoly:
    """``det(chi_{(a_i|a_j)}(t + c_i; t + iota(c_j)))`` after resolving the constraints.

    ``resolve=False`` skips the resolution step and builds the determinant from
    the raw constants; the result is then in general not a CKP tau-function.
    """
    a = _strictly_decreasing(a)
    c = c or ConstMatrix.zero()
    c.check_shape(shape_ckp(a))
    if resolve:
        c = resolve_ckp_constraints(a, c)
    f = FrobeniusCoords.self_conjugate(a)
    return TauPoly(det_poly(ckp_matrix(a, c)), Family.CKP, f, c)


def tau_ckp_tmatrix(a, c: ConstMatrix | None = None, resolve: bool = True) -> TauPoly:
    """Determinant of the matrix whose lower triangle is ``iota`` applied to
    ``chi_{(a_j|a_i)}`` with ``iota`` acting on the whole arguments ``t + c``.

    Written out, entry ``(i, j)`` with ``i > j`` is
    ``iota(chi_{(a_j|a_i)}(t + c_j; t + iota(c_i)))`` where the outer ``iota``
    flips the even times only.  With resolved constants the matrix agrees with
    :func:`ckp_matrix` entry by entry.  ``resolve=False`` keeps ``c`` as given:
    the entries then differ, but the determinant does not depend on the
    constrained slots and equals :func:`tau_ckp` with resolved constants.
    """
    a = _strictly_decreasing(a)
    c = c or ConstMatrix.zero()
    c.check_shape(shape_ckp(a))
    if resolve:
        c = resolve_ckp_constraints(a, c)
    k = len(a)
    plain = [ArgSpec.times(shift=c.column(i)) for i in range(1, k + 1)]
    flipped = [ArgSpec.times(shift=iota_vector(c.column(i))) for i in range(1, k + 1)]
    m = [[Poly()] * k for _ in range(k)]
    for i in range(k):
        for j in range(k):
            if i <= j:
                m[i][j] = chi(a[i], a[j], plain[i], flipped[j])
            else:
                m[i][j] = iota_c(chi(a[j], a[i], plain[j], flipped[i]))
    f = FrobeniusCoords.self_conjugate(a)
    return TauPoly(det_poly(m), Family.CKP, f, c)


# ---------------------------------------------------------------- reduced CKP

def _class_vector(cc: Mapping[int, Sequence], r: int) -> tuple[Poly, ...]:
    return _trim(cc.get(r, ()))


def _reduced_conditions(n: int, a: Sequence[int]):
    """``(i, j, p, N)`` with ``i <= j`` and ``N = a_i + a_j + 1 - p n >= 1``.

    ``p = 0, i < j`` are the pair constraints; ``p >= 1`` come from
    ``z**(p n)`` preserving the point of the Grassmannian.
    """
    for j in range(1, len(a) + 1):
        for i in range(1, j + 1):
            p = 0
            while True:
                N = a[i - 1] + a[j - 1] + 1 - p * n
                if N < 1:
                    break
                if not (p == 0 and i == j):
                    yield i, j, p, N
                p += 1


def reduced_constraint_residuals(n: int, a, class_constants) -> dict[tuple[int, int, int], Poly]:
    """Nonzero ``s_N(c_[a_i] - iota(c_[a_j]))`` keyed by ``(i, j, p)``, ``N = a_i + a_j + 1 - p n``."""
    a = _strictly_decreasing(a)
    out = {}
    for i, j, p, N in _reduced_conditions(n, a):
        ci = _class_vector(class_constants, a[i - 1] % n)
        cj = _class_vector(class_constants, a[j - 1] % n)
        xs = []
        for m in range(1, N + 1):
            x = ci[m - 1] if m <= len(ci) else Poly()
            y = cj[m - 1] if m <= len(cj) else Poly()
            xs.append(x + y if m % 2 == 0 else x - y)
        r = elementary_schur(N, ArgSpec.of(xs))
        if r:
            out[(i, j, p)] = r
    return out


def solve_reduced_constraints(n: int, a, class_constants: Mapping[int, Sequence]) -> dict[int, tuple[Poly, ...]]:
    """Assign the constrained even entries when all ``a_i`` share one class.

    With a single class every condition of even order ``N = 2k`` reads
    ``c_{2k} = -s_k(2c_2, 2c_4, ..., 2c_{2k-2}, 0) / 2``; odd orders are
    automatic.  With several classes nothing is assigned and any violated
    condition raises :class:`ConstraintViolation`.
    """
    a = _strictly_decreasing(a)
    cc = {int(r) % n: _trim(v) for r, v in class_constants.items()}
    classes = {x % n for x in a}
    if len(classes) == 1:
        (r,) = classes
        vec = list(cc.get(r, ()))
        ks = sorted({N // 2 for *_, N in _reduced_conditions(n, a) if N % 2 == 0})
        for k in ks:
            xs = [(vec[2 * m - 1] if 2 * m <= len(vec) else Poly()).scale(2) for m in range(1, k)]
            val = -elementary_schur(k, ArgSpec.of(xs)).scale(mpq(1, 2))
            while len(vec) < 2 * k:
                vec.append(Poly())
            vec[2 * k - 1] = val
        cc[r] = _trim(vec)
        if reduced_constraint_residuals(n, a, cc):
            raise ConsistencyError("single-class constraint solution left nonzero residuals")
        return cc
    res = reduced_constraint_residuals(n, a, cc)
    if res:
        lines = ", ".join(f"(i={i}, j={j}, p={p}): {q}" for (i, j, p), q in sorted(res.items()))
        raise ConstraintViolation(
            "several congruence classes present; constraints are checked, not solved "
            f"(verify-only mode); violated: {lines}", res)
    return cc


def tau_ckp_reduced(n: int, f: FrobeniusCoords, class_constants: Mapping[int, Sequence] | None = None) -> TauPoly:
    """Reduced CKP tau with one constant vector per congruence class of ``a_i`` mod ``n``."""
    if n < 2:
        raise ParameterError("n must be >= 2")
    f = _as_frobenius(f)
    if not f.is_self_conjugate():
        raise ParameterError("reduced CKP tau-functions need self-conjugate Frobenius data")
    a = f.a
    why = admissibility_violation(a, n)
    if why:
        raise ParameterError(f"(a={list(a)}, n={n}) is not admissible: {why}")
    cc = {int(r): _trim(v) for r, v in (class_constants or {}).items()}
    bounds = shape_reduced(n, a)
    for r, v in cc.items():
        if v and r not in bounds:
            raise ParameterError(f"constants given for class {r}, which no a_i belongs to")
        if v and len(v) > bounds[r]:
            raise ParameterError(f"class {r} has {len(v)} constants, at most {bounds[r]} allowed")
    cc = solve_reduced_constraints(n, a, cc)
    cols = ConstMatrix(tuple(cc.get(x % n, ()) for x in a))
    tau = det_poly(ckp_matrix(a, cols))
    return TauPoly(tau, Family.CKP_REDUCED, f, cols, n=n)


# ---------------------------------------------------------------- BKP

def _pad_strict(lam) -> tuple[int, ...]:
    lam = tuple(int(x) for x in lam)
    if not is_strict(lam):
        raise ParameterError(f"expected a strict partition, got {list(lam)}")
    if len(lam) % 2:
        lam = lam + (0,)
        if not is_strict(lam):
            raise ParameterError("cannot pad: the last part is already 0")
    return lam


def bkp_matrix(lam, c: ConstMatrix | None = None) -> list[list[Poly]]:
    """Antisymmetric matrix with upper entries ``chibar_{lam_i, lam_j}(t_o + c_i, t_o + iota(c_j))``."""
    lam = _pad_strict(lam)
    c = c or ConstMatrix.zero()
    m2 = len(lam)
    firsts = [ArgSpec.times(shift=c.column(i), odd_only=True) for i in range(1, m2 + 1)]
    seconds = [ArgSpec.times(shift=iota_vector(c.column(j)), odd_only=True) for j in range(1, m2 + 1)]
    m = [[Poly()] * m2 for _ in range(m2)]
    for i in range(m2):
        for j in range(i + 1, m2):
            e = chibar(lam[i], lam[j], firsts[i], seconds[j])
            m[i][j] = e
            m[j][i] = -e
    return m


def tau_bkp(lam, c: ConstMatrix | None = None) -> TauPoly:
    """Pfaffian of :func:`bkp_matrix`; odd-length input gets a trailing 0 part."""
    padded = _pad_strict(lam)
    c = c or ConstMatrix.zero()
    m = bkp_matrix(padded, c)
    try:
        check_antisymmetric(m)
    except Exception as exc:  # pragma: no cover - construction is antisymmetric
        raise ConsistencyError(str(exc)) from exc
    return TauPoly(pfaffian_poly(m), Family.BKP, padded, c)


def bkp_square_partition(lam) -> Partition:
    """The partition whose Schur polynomial at odd times is proportional to the square."""
    lam = _pad_strict(lam)
    if not lam:
        return Partition()
    parts = lam if lam[-1] != 0 else lam[:-1]
    return from_frobenius(FrobeniusCoords(tuple(x - 1 for x in parts), tuple(parts)))
