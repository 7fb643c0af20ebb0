"""Exact determinants and Pfaffians of Poly matrices."""

from __future__ import annotations

from ..errors import StructuralError
from .poly import Poly

__all__ = ["det_poly", "pfaffian_poly", "det_cofactor", "det_bareiss", "CUTOFF"]

# cofactor expansion up to this size, Bareiss above
CUTOFF = 6


def _as_matrix(m) -> list[list[Poly]]:
    rows = [[Poly.coerce(x) for x in row] for row in m]
    n = len(rows)
    for r in rows:
        if len(r) != n:
            raise StructuralError("matrix is not square")
    return rows


def det_cofactor(m) -> Poly:
    """Laplace expansion along columns, memoized on the set of rows still free."""
    a = _as_matrix(m)
    n = len(a)
    memo: dict[int, Poly] = {}

    def minor(col: int, rows: int) -> Poly:
        # rows: bitmask of the rows still available for columns col..n-1
        if col == n:
            return Poly.const(1)
        hit = memo.get(rows)
        if hit is not None:
            return hit
        acc = Poly()
        sign = 1
        for r in range(n):
            if not rows >> r & 1:
                continue
            e = a[r][col]
            if e:
                sub = minor(col + 1, rows & ~(1 << r))
                if sub:
                    term = e * sub
                    acc = acc + term if sign > 0 else acc - term
            sign = -sign
        memo[rows] = acc
        return acc

    return minor(0, (1 << n) - 1)


def det_bareiss(m) -> Poly:
    """Fraction-free Bareiss elimination with exact polynomial division."""
    a = _as_matrix(m)
    n = len(a)
    if n == 0:
        return Poly.const(1)
    sign = 1
    prev = Poly.const(1)
    for k in range(n - 1):
        # pivot: the sparsest nonzero entry in column k
        best = None
        for r in range(k, n):
            if a[r][k] and (best is None or len(a[r][k]) < len(a[best][k])):
                best = r
        if best is None:
            return Poly()
        if best != k:
            a[k], a[best] = a[best], a[k]
            sign = -sign
        piv = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = a[i][j] * piv - a[i][k] * a[k][j]
                a[i][j] = num.exact_div(prev) if not prev.is_constant() else num / prev.constant_term()
            a[i][k] = Poly()
        prev = piv
    d = a[n - 1][n - 1]
    return -d if sign < 0 else d


def det_poly(m) -> Poly:
    """Exact determinant; the empty matrix has determinant 1."""
    a = _as_matrix(m)
    if len(a) <= CUTOFF:
        return det_cofactor(a)
    return det_bareiss(a)


def check_antisymmetric(a: list[list[Poly]]) -> None:
    n = len(a)
    for i in range(n):
        if a[i][i]:
            raise StructuralError(f"diagonal entry ({i}, {i}) is nonzero")
        for j in range(i + 1, n):
            if a[i][j] != -a[j][i]:
                raise StructuralError(f"entries ({i}, {j}) and ({j}, {i}) are not antisymmetric")


def pfaffian_poly(m) -> Poly:
    """Pfaffian by first-row expansion, memoized on the remaining index set."""
    a = _as_matrix(m)
    n = len(a)
    if n % 2:
        raise StructuralError("Pfaffian of an odd-size matrix")
    check_antisymmetric(a)
    memo: dict[int, Poly] = {}

    def pf(idx: int) -> Poly:
        if not idx:
            return Poly.const(1)
        hit = memo.get(idx)
        if hit is not None:
            return hit
        members = [i for i in range(n) if idx >> i & 1]
        i0 = members[0]
        rest = idx & ~(1 << i0)
        acc = Poly()
        for pos, j in enumerate(members[1:]):
            e = a[i0][j]
            if e:
                sub = pf(rest & ~(1 << j))
                if sub:
                    term = e * sub
                    acc = acc + term if pos % 2 == 0 else acc - term
        memo[idx] = acc
        return acc

    return pf((1 << n) - 1)
