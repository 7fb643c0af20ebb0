"""
Rational solutions of the Kaup-Kupershmidt equation
===================================================

3-reduced CKP tau-functions restricted to the odd times give rational
solutions u = 3 (log tau)_xx of the KK equation.
"""

from polytau.codec import export_latex
from polytau.partitions import FrobeniusCoords
from polytau.reduction import restrict_odd, u_from_tau, verify_kk
from polytau.schur import schur_jt
from polytau.seeds import gen_vector
from polytau.tauforge import shape_reduced, tau_ckp_reduced

for a in [(0,), (2,), (3, 0)]:
    f = FrobeniusCoords.self_conjugate(a)
    bounds = shape_reduced(3, f.a)
    consts = {r: gen_vector(7 + r, L) for r, L in bounds.items()}
    tau = tau_ckp_reduced(3, f, consts)
    odd = restrict_odd(tau).poly
    u = u_from_tau(odd)
    print(f"a={a}: tau =", export_latex(odd))
    if len(u.den) < 5:
        print("   u =", u)
    else:
        print(f"   u has {len(u.num)}/{len(u.den)} numerator/denominator terms")
    print("   KK:", verify_kk(tau).passed)

# s_(2,2) is self-conjugate but not 3-reduced, and KK fails
bad = verify_kk(schur_jt((2, 2)))
print("s_(2,2): KK", bad.passed, "residual terms", len(bad.residual))
