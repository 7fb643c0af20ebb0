"""
A CKP tau-function with symbolic constants
==========================================

Builds the smallest non-trivial CKP tau-function, for the self-conjugate
Frobenius data (1,0|1,0), once with the constants left free and once with
the constraints that make it a genuine CKP tau-function.
"""

from polytau.codec import export_latex
from polytau.hirota import IdentityKind, verify_ckp, verify_kp
from polytau.tauforge import ConstMatrix, resolve_ckp_constraints, shape_ckp, tau_ckp

a = (1, 0)
c = ConstMatrix.symbolic(shape_ckp(a))   # c_{i,j} as polynomial variables

raw = tau_ckp(a, c, resolve=False)
print("unconstrained:", len(raw.poly), "monomials")
print(export_latex(raw.poly))

# KP holds for any constants, the iota symmetry does not
r = verify_ckp(raw)
print("KP part:", r.parts[0].passed)
print("iota part residual:", export_latex(r.part(IdentityKind.IOTA_C).residual))

# solving the constraints eliminates c_{2,2}
resolved = resolve_ckp_constraints(a, c)
print("c_{2,2} ->", export_latex(resolved.entry(2, 2)))

tau = tau_ckp(a, c)
print("constrained:", len(tau.poly), "monomials")
print("KP:", verify_kp(tau).passed, " CKP:", verify_ckp(tau).passed)
