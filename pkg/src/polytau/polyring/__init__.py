"""Exact arithmetic kernel: rationals, sparse polynomials, Laurent series in z,
rational functions, determinants and Pfaffians."""

from .laurent import LaurentPoly, laurent_mul_residue, miwa_shift
from .linalg import det_bareiss, det_cofactor, det_poly, pfaffian_poly
from .poly import (
    Bank,
    Poly,
    Rat,
    VarRef,
    cvar,
    elementary_sequence,
    expand_shift,
    iota_c,
    partial_derivative,
    poly_arith,
    rat_str,
    relabel,
    shift_constants,
    t,
    to_rat,
    tp,
)
from .ratfunc import RatFunc

__all__ = [
    "Bank",
    "LaurentPoly",
    "Poly",
    "Rat",
    "RatFunc",
    "VarRef",
    "cvar",
    "det_bareiss",
    "det_cofactor",
    "det_poly",
    "elementary_sequence",
    "expand_shift",
    "iota_c",
    "laurent_mul_residue",
    "miwa_shift",
    "partial_derivative",
    "pfaffian_poly",
    "poly_arith",
    "rat_str",
    "relabel",
    "shift_constants",
    "t",
    "to_rat",
    "tp",
]
