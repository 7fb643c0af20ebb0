"""Wave functions with the exponential factor ``exp(sum t_n z**n)`` stripped.

``p_symbol`` takes the Miwa-shift route ``tau(t - [z^-1]) / tau(t)``.  The two
determinant routes build an extra first row carrying the ``z`` dependence and
expand along it; ``cross_check_wave`` compares them with the Miwa route.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .errors import ParameterError
from .hirota import CheckReport, Identity, IdentityKind
from .partitions import FrobeniusCoords, Partition
from .polyring import Bank, LaurentPoly, Poly, det_poly, miwa_shift
from .schur import ArgSpec, chi, schur_sequence
from .tauforge import (
    ConstMatrix,
    Family,
    TauPoly,
    shape_giambelli,
    shape_kp_jt,
    tau_kp_giambelli,
    tau_kp_jt,
)

__all__ = [
    "WaveSymbol",
    "WaveRoute",
    "p_symbol",
    "wave_jt_det",
    "wave_giambelli_det",
    "cross_check_wave",
]


class WaveRoute(enum.Enum):
    JT = "jt"
    GIAMBELLI = "giambelli"


@dataclass(frozen=True)
class WaveSymbol:
    """``numerator / denominator``, a series in ``z**-1``."""

    numerator: LaurentPoly
    denominator: Poly
    stripped: bool = True

    def __post_init__(self):
        if not self.denominator:
            raise ParameterError("wave symbol with zero denominator")
        hi = self.numerator.max_power()
        if hi is not None and hi > 0:
            raise ParameterError("wave numerator must only carry powers z**k, k <= 0")

    def is_monic(self) -> bool:
        return self.numerator[0] == self.denominator


def p_symbol(tau) -> WaveSymbol:
    p = getattr(tau, "poly", tau)
    if not p:
        raise ParameterError("tau must be nonzero")
    return WaveSymbol(miwa_shift(p, Bank.T, -1, 1), p)


def _expand_first_row(first: list[LaurentPoly], body: list[list[Poly]]) -> LaurentPoly:
    """Determinant of ``[first; body]`` by Laplace expansion along the first row."""
    n = len(first)
    acc = LaurentPoly()
    for j in range(n):
        if not first[j]:
            continue
        minor = det_poly([row[:j] + row[j + 1:] for row in body])
        if minor:
            term = first[j] * minor
            acc = acc - term if j % 2 else acc + term
    return acc


def wave_jt_det(lam, c: ConstMatrix | None = None) -> WaveSymbol:
    """First row ``z**-(j-1)``; row ``i >= 2`` is ``s_{lam_{i-1} - (i-1) + j - 1}(t + c_{i-1})``."""
    lam = Partition(lam)
    c = c or ConstMatrix.zero()
    c.check_shape(shape_kp_jt(lam))
    ell = len(lam)
    body = []
    for i in range(1, ell + 1):
        base = lam[i - 1] - i
        seq = schur_sequence(base + ell, ArgSpec.times(shift=c.column(i)))
        body.append([seq[base + j] if base + j >= 0 else Poly() for j in range(ell + 1)])
    first = [LaurentPoly.z(-j) for j in range(ell + 1)]
    return WaveSymbol(_expand_first_row(first, body), tau_kp_jt(lam, c).poly)


def _chi_at_miwa(b: int, second: ArgSpec) -> LaurentPoly:
    """``chi_{(0|b)}([z^-1]; second)`` using ``s_k([z^-1]) = z**-k``."""
    q = schur_sequence(b, second.negated())
    sign = -1 if b % 2 else 1
    return LaurentPoly({-n - 1: q[b - n].scale(sign) for n in range(b + 1)})


def wave_giambelli_det(f: FrobeniusCoords, c: ConstMatrix | None = None,
                       d: ConstMatrix | None = None) -> WaveSymbol:
    """First row ``(1, chi_{(0|b_j)}([z^-1]; t + d_j))``, first column
    ``(1, s_{a_i}(t + c_i))``, body ``chi_{(a_i|b_j)}(t + c_i; t + d_j)``."""
    if not isinstance(f, FrobeniusCoords):
        raise ParameterError("expected FrobeniusCoords")
    c = c or ConstMatrix.zero()
    d = d or ConstMatrix.zero()
    cb, db = shape_giambelli(f)
    c.check_shape(cb, "c")
    d.check_shape(db, "d")
    k = f.rank
    firsts = [ArgSpec.times(shift=c.column(i)) for i in range(1, k + 1)]
    seconds = [ArgSpec.times(shift=d.column(j)) for j in range(1, k + 1)]
    first = [LaurentPoly({0: 1})] + [_chi_at_miwa(f.b[j], seconds[j]) for j in range(k)]
    body = []
    for i in range(k):
        row = [schur_sequence(f.a[i], firsts[i])[f.a[i]]]
        row += [chi(f.a[i], f.b[j], firsts[i], seconds[j]) for j in range(k)]
        body.append(row)
    return WaveSymbol(_expand_first_row(first, body), tau_kp_giambelli(f, c, d).poly)


def cross_check_wave(tau: TauPoly, route) -> CheckReport:
    """Determinant-route numerator against ``miwa_shift(tau)`` up to a scalar.

    On failure ``stats["witness"]`` holds the difference Laurent polynomial
    and the residual is its coefficient at the lowest differing power.
    """
    route = WaveRoute(route) if not isinstance(route, WaveRoute) else route
    if route is WaveRoute.JT:
        if tau.family is not Family.KP_JT:
            raise ParameterError("the JT route needs a tau from tau_kp_jt")
        w = wave_jt_det(tau.lam, tau.constants)
    else:
        if tau.family is not Family.KP_GIAMBELLI:
            raise ParameterError("the Giambelli route needs a tau from tau_kp_giambelli")
        w = wave_giambelli_det(tau.lam, tau.constants, tau.d)
    ref = p_symbol(tau).numerator
    num = w.numerator
    scalar = None
    # the scalar is fixed by the z**0 coefficients, which are nonzero multiples of tau
    top_ref, top_num = ref[0], num[0]
    if top_ref and top_num:
        key, val = next(iter(top_ref.items()))
        other = dict(top_num.items()).get(key)
        if other:
            scalar = other / val
    diff = num - ref * scalar if scalar is not None else num - ref
    identity = Identity(IdentityKind.WAVE, (route.value,))
    stats = {"scalar": scalar, "monic": w.is_monic(), "zpowers": num.powers()}
    if not diff:
        return CheckReport(identity, True, Poly(), stats)
    stats["witness"] = diff
    return CheckReport(identity, False, diff[diff.min_power()], stats)
