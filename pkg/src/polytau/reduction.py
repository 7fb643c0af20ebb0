"""PDE checks for the 3- and 2-reductions on the odd times.

``u = factor * d^2 log tau / dt_1^2``.  The checks never form nested
quotients: with ``d^k log tau = N_k / tau**k`` and

    N_1 = tau_x,   N_{k+1} = tau * dN_k/dx - k * tau_x * N_k,

every term of an equation is a polynomial over one common power of ``tau``,
and the residual reported is that common numerator.
"""

from __future__ import annotations

from dataclasses import dataclass

from gmpy2 import mpq

from .errors import ParameterError
from .hirota import CheckReport, Identity, IdentityKind
from .polyring import Bank, Poly, RatFunc, VarRef, partial_derivative, to_rat
from .polyring.poly import _decode
from .tauforge import Family, TauPoly

__all__ = [
    "OddRestriction",
    "restrict_odd",
    "u_from_tau",
    "log_derivative_numerators",
    "verify_kk",
    "verify_kdv",
]

X = VarRef(Bank.T, 1)


@dataclass(frozen=True)
class OddRestriction:
    """A polynomial in which every even-indexed time has been set to zero."""

    poly: Poly

    def __post_init__(self):
        for v in self.poly.variables():
            if v.bank == Bank.T and v.index % 2 == 0:
                raise ParameterError(f"odd restriction still contains {v}")


def restrict_odd(tau) -> OddRestriction:
    p = getattr(tau, "poly", tau)
    if isinstance(p, OddRestriction):
        return p
    kept = {}
    for key, c in p.items():
        if all(not (s % 3 == int(Bank.T) and (s // 3) % 2 == 1) for s, _ in _decode(key)):
            kept[key] = c
    return OddRestriction(Poly(kept))


def u_from_tau(tau_o, factor=3) -> RatFunc:
    """``factor * (tau tau_11 - tau_1**2) / tau**2``."""
    p = tau_o.poly if isinstance(tau_o, OddRestriction) else Poly.coerce(tau_o)
    if not p:
        raise ParameterError("tau must be nonzero")
    d1 = partial_derivative(p, X)
    d11 = partial_derivative(d1, X)
    return RatFunc((p * d11 - d1 * d1).scale(to_rat(factor)), p * p)


def log_derivative_numerators(p: Poly, kmax: int) -> list[Poly]:
    """``[N_0, N_1, ..., N_kmax]`` with ``d^k log p / dx^k = N_k / p**k`` (``N_0`` unused)."""
    px = partial_derivative(p, X)
    out = [Poly(), px]
    for k in range(1, kmax):
        nk = out[k]
        out.append(p * partial_derivative(nk, X) - (px * nk).scale(k))
    return out[: kmax + 1]


def _odd_poly(tau, what: str, n: int) -> Poly:
    if isinstance(tau, TauPoly):
        if tau.family is Family.BKP or (tau.family is Family.CKP_REDUCED and tau.n != n):
            raise ParameterError(f"{what} needs an {n}-reduced tau, got family {tau.family.value}"
                                 + (f" with n={tau.n}" if tau.n else ""))
        if n == 3 and tau.family is not Family.CKP_REDUCED:
            raise ParameterError(f"{what} needs a tau from tau_ckp_reduced with n=3")
    p = restrict_odd(tau).poly
    if not p:
        raise ParameterError("tau vanishes on the odd times")
    return p


def verify_kk(tau) -> CheckReport:
    """``u_5 = -(10 u^2 u_x + 25 u_x u_xx + 10 u u_xxx + 2 u_xxxxx) / 18`` with ``u = 3 (log tau)_xx``.

    Multiplying by ``tau**7 / 3`` gives the polynomial identity
    ``tau**4 (tau dN_2/dt_5 - 2 tau_5 N_2) + (90 N_2^2 N_3 + 75 N_3 N_4 + 30 N_2 N_5 + 2 N_7) / 18 = 0``.
    """
    p = _odd_poly(tau, "verify_kk", 3)
    N = log_derivative_numerators(p, 7)
    t5 = VarRef(Bank.T, 5)
    p2 = p * p
    lhs = p2 * p2 * (p * partial_derivative(N[2], t5) - (partial_derivative(p, t5) * N[2]).scale(2))
    rhs = (N[2] * N[2] * N[3]).scale(90) + (N[3] * N[4]).scale(75) \
        + (N[2] * N[5]).scale(30) + N[7].scale(2)
    res = lhs + rhs.scale(mpq(1, 18))
    return CheckReport(Identity(IdentityKind.KK), res.is_zero(), res,
                       {"terms": len(p), "wdeg": p.wdeg(), "factor": 3, "common_power": 7})


def verify_kdv(tau) -> CheckReport:
    """``u_3 = (u_xxx + 6 u u_x) / 4`` with ``u = 2 (log tau)_xx``.

    Multiplying by ``tau**5 / 2`` gives
    ``tau**2 (tau dN_2/dt_3 - 2 tau_3 N_2) - N_5 / 4 - 3 N_2 N_3 = 0``.
    """
    p = _odd_poly(tau, "verify_kdv", 2)
    N = log_derivative_numerators(p, 5)
    t3 = VarRef(Bank.T, 3)
    lhs = p * p * (p * partial_derivative(N[2], t3) - (partial_derivative(p, t3) * N[2]).scale(2))
    res = lhs - N[5].scale(mpq(1, 4)) - (N[2] * N[3]).scale(3)
    return CheckReport(Identity(IdentityKind.KDV), res.is_zero(), res,
                       {"terms": len(p), "wdeg": p.wdeg(), "factor": 2, "common_power": 5})
