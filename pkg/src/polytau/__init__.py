"""Exact construction and verification of polynomial KP, CKP and BKP tau-functions."""

from .errors import (
    ConsistencyError,
    ConstraintViolation,
    ParameterError,
    PolytauError,
    StructuralError,
)
from .hirota import (
    CheckReport,
    Identity,
    IdentityKind,
    verify_ckp,
    verify_kp,
    verify_reduced,
    verify_schur_constraint,
    verify_time_independence,
)
from .partitions import FrobeniusCoords, Partition, conjugate, from_frobenius, to_frobenius
from .polyring import LaurentPoly, Poly, RatFunc, iota_c, miwa_shift, t, tp
from .reduction import restrict_odd, u_from_tau, verify_kdv, verify_kk
from .schur import ArgSpec, chi, chibar, elementary_schur, schur_coefficients, schur_jt
from .seeds import SeedSpec, gen_constants
from .tauforge import (
    ConstMatrix,
    Family,
    TauPoly,
    resolve_ckp_constraints,
    solve_reduced_constraints,
    tau_bkp,
    tau_ckp,
    tau_ckp_reduced,
    tau_kp_giambelli,
    tau_kp_jt,
)
from .wave import cross_check_wave, p_symbol, wave_giambelli_det, wave_jt_det

__version__ = "0.1.0"
