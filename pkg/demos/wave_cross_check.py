"""
Wave functions two ways
=======================

The wave function of a KP tau-function can be read off the shifted tau
(tau(t - [1/z]) / tau(t)) or from a bordered determinant.  The two routes
agree up to a constant factor.
"""

from polytau.partitions import to_frobenius
from polytau.seeds import SeedSpec, gen_constants
from polytau.tauforge import shape_giambelli, shape_kp_jt, tau_kp_giambelli, tau_kp_jt
from polytau.wave import cross_check_wave, p_symbol, wave_jt_det

lam = (2, 1)
w = wave_jt_det(lam)
print("numerator by z power:")
for k in sorted(w.numerator, reverse=True):
    print(f"  z^{k}:", w.numerator[k])
print("same as the shift route:", p_symbol(w.denominator).numerator == w.numerator)

for lam in [(2, 2), (3, 1, 1), (4, 2)]:
    jt = tau_kp_jt(lam, gen_constants(SeedSpec(1, tuple(shape_kp_jt(lam)))))
    f = to_frobenius(lam)
    cb, db = shape_giambelli(f)
    gb = tau_kp_giambelli(f, gen_constants(SeedSpec(1, tuple(cb))), gen_constants(SeedSpec(2, tuple(db))))
    for tau, route in ((jt, "jt"), (gb, "giambelli")):
        r = cross_check_wave(tau, route)
        print(lam, route, r.passed, "scalar", r.stats["scalar"])
