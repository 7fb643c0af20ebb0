from fractions import Fraction

import pytest

from polytau.errors import ConsistencyError, ConstraintViolation, ParameterError
from polytau.hirota import _SchurData, _schur_passes, verify_ckp, verify_kp
from polytau.partitions import FrobeniusCoords, Partition, partitions_up_to, to_frobenius
from polytau.polyring import Bank, Poly, VarRef, cvar, det_poly, iota_c, pfaffian_poly, t, tp
from polytau.reduction import restrict_odd
from polytau.schur import ArgSpec, chi, elementary_schur, schur_jt
from polytau.seeds import SeedSpec, gen_constants, gen_vector
from polytau.tauforge import (
    ConstMatrix,
    Family,
    TauPoly,
    bkp_matrix,
    bkp_square_partition,
    ckp_constraint_residuals,
    ckp_matrix,
    iota_vector,
    reduced_constraint_residuals,
    resolve_ckp_constraints,
    shape_ckp,
    shape_giambelli,
    shape_kp_jt,
    shape_reduced,
    solve_reduced_constraints,
    tau_bkp,
    tau_ckp,
    tau_ckp_reduced,
    tau_ckp_tmatrix,
    tau_kp_giambelli,
    tau_kp_jt,
)

KAPPA = Fraction(7, 3)
S22 = t(1) ** 4 / 12 + t(2) ** 2 - t(1) * t(3)


def seeded(seed, shape):
    return gen_constants(SeedSpec(seed, tuple(shape)))


# -- ConstMatrix and TauPoly -----------------------------------------------------

def test_const_matrix_access():
    c = ConstMatrix(((1, 2, 0), (3,)))
    assert c.column(1) == (Poly.const(1), Poly.const(2))
    assert c.entry(2, 1) == 2 and c.entry(5, 1) == 0 and c.entry(1, 9) == 0
    assert c.with_entry(2, 3, 5).entry(2, 3) == 5
    assert ConstMatrix.zero().is_zero() and c.is_numeric()
    assert not ConstMatrix.symbolic([2]).is_numeric()


def test_shape_violations():
    with pytest.raises(ParameterError):
        tau_kp_jt((1,), ConstMatrix(((1, 2),)))
    with pytest.raises(ParameterError):
        tau_kp_jt((1,), ConstMatrix(((1,), (1,))))
    with pytest.raises(ParameterError):
        tau_kp_giambelli(FrobeniusCoords((0,), (0,)), d=ConstMatrix(((1,),)))


def test_tau_poly_invariants():
    with pytest.raises(ConsistencyError):
        TauPoly(Poly(), Family.KP_JT, Partition())
    with pytest.raises(ConsistencyError):
        TauPoly(tp(1), Family.KP_JT, Partition((1,)))


def test_shapes():
    assert shape_kp_jt((2, 2)) == [3, 2]
    f = to_frobenius((3, 2, 1))
    assert shape_giambelli(f) == ([5, 3], [2, 0])
    assert shape_ckp((1, 0)) == [3, 2]
    assert shape_reduced(3, (5, 2)) == {2: 11}
    assert shape_reduced(5, (1, 0)) == {1: 3, 0: 2}


# -- KP constructors -------------------------------------------------------------

def test_kp_jt_examples():
    assert tau_kp_jt((1,), ConstMatrix(((KAPPA,),))).poly == t(1) + KAPPA
    assert tau_kp_jt(()).poly == Poly.const(1)
    assert tau_kp_jt((2, 2)).poly == S22


def test_kp_jt_column_shifts():
    # (1,1): det [[s_1(t+c_1), s_0], [s_2(t+c_1), s_1(t+c_2)]]
    c = ConstMatrix(((1, 2), (3,)))
    x1 = ArgSpec.times(shift=c.column(1))
    x2 = ArgSpec.times(shift=c.column(2))
    expected = elementary_schur(1, x1) * elementary_schur(1, x2) - elementary_schur(2, x1)
    assert tau_kp_jt((1, 1), c).poly == expected


def test_giambelli_examples():
    f = FrobeniusCoords((0,), (0,))
    assert tau_kp_giambelli(f, ConstMatrix(((KAPPA,),))).poly == t(1) + KAPPA
    assert tau_kp_giambelli(FrobeniusCoords((), ())).poly == Poly.const(1)
    g = FrobeniusCoords((1, 0), (1, 0))
    cb, db = shape_giambelli(g)
    for seed in range(3):
        tau = tau_kp_giambelli(g, seeded(seed, cb), seeded(seed + 1, db))
        assert verify_kp(tau).passed


def test_zero_constants_collapse():
    for lam in partitions_up_to(7):
        s = schur_jt(lam)
        assert tau_kp_jt(lam).poly == s
        assert tau_kp_giambelli(to_frobenius(lam)).poly == s


# -- CKP -------------------------------------------------------------------------

def test_resolve_example():
    c = ConstMatrix.symbolic([3, 2])
    r = resolve_ckp_constraints((1, 0), c)
    c11, c12, c21 = cvar(1, 1), cvar(1, 2), cvar(2, 1)
    assert r.entry(2, 2) == -(c11 ** 2 / 2 - c11 * c12 + c12 ** 2 / 2 + c21)
    assert not ckp_constraint_residuals((1, 0), r)
    assert ckp_constraint_residuals((1, 0), c)


def test_resolve_trivial_cases():
    c = ConstMatrix(((1, 2, 3),))
    assert resolve_ckp_constraints((2,), c) == c
    assert resolve_ckp_constraints((3, 1, 0), ConstMatrix.zero()).is_zero()


@pytest.mark.parametrize("a", [(2, 0), (3, 1, 0), (4, 2, 1)])
def test_resolution_satisfies_every_constraint(a):
    for seed in range(3):
        r = resolve_ckp_constraints(a, seeded(seed, shape_ckp(a)))
        assert not ckp_constraint_residuals(a, r)


def test_ckp_examples():
    assert tau_ckp((0,), ConstMatrix(((KAPPA,),))).poly == t(1) + KAPPA
    assert tau_ckp((1, 0)).poly == S22
    assert tau_ckp(()).poly == Poly.const(1)
    with pytest.raises(ParameterError):
        tau_ckp((0, 1))


def test_ckp_outputs_are_ckp():
    for a in [(1, 0), (2, 0), (3, 1)]:
        tau = tau_ckp(a, seeded(11, shape_ckp(a)))
        assert tau.poly == iota_c(tau.poly)
        assert verify_ckp(tau).passed


def test_unresolved_ckp_is_not_iota_invariant():
    tau = tau_ckp((1, 0), seeded(3, shape_ckp((1, 0))), resolve=False)
    assert tau.poly != iota_c(tau.poly)


# -- T-matrix form ---------------------------------------------------------------

def test_tmatrix_examples():
    c = ConstMatrix(((KAPPA,),))
    assert tau_ckp_tmatrix((0,), c).poly == tau_ckp((0,), c).poly
    assert tau_ckp_tmatrix((1, 0)).poly == S22


@pytest.mark.parametrize("a", [(1, 0), (2, 0), (3, 1, 0)])
def test_tmatrix_with_resolved_constants_equals_formt(a):
    for seed in range(3):
        c = seeded(seed, shape_ckp(a))
        # the sign turns out to be +1 in every case tried
        assert tau_ckp_tmatrix(a, c).poly == tau_ckp(a, c).poly


@pytest.mark.parametrize("a", [(1, 0), (2, 1), (3, 1, 0)])
def test_tmatrix_ignores_constrained_slots(a):
    c = seeded(5, shape_ckp(a))
    raw = tau_ckp_tmatrix(a, c, resolve=False)
    assert raw.poly == tau_ckp(a, c).poly
    assert raw.poly != tau_ckp(a, c, resolve=False).poly
    data = _SchurData(raw.poly)
    assert _schur_passes(data, "KP", 0)[0] and _schur_passes(data, "CKP", 0)[0]


def test_tmatrix_symbolic_builds_in_the_constraint():
    c = ConstMatrix.symbolic(shape_ckp((1, 0)))
    assert tau_ckp_tmatrix((1, 0), c, resolve=False).poly == tau_ckp((1, 0), c).poly


def test_tmatrix_entries_match_with_resolved_constants():
    a = (3, 1, 0)
    c = resolve_ckp_constraints(a, seeded(8, shape_ckp(a)))
    plain = [ArgSpec.times(shift=c.column(i)) for i in range(1, 4)]
    flipped = [ArgSpec.times(shift=iota_vector(c.column(i))) for i in range(1, 4)]
    m = ckp_matrix(a, c)
    for i in range(3):
        for j in range(i):
            assert iota_c(chi(a[j], a[i], plain[j], flipped[i])) == m[i][j]


# -- reduced CKP -----------------------------------------------------------------

def test_reduced_examples():
    f0 = FrobeniusCoords.self_conjugate((0,))
    assert tau_ckp_reduced(3, f0, {0: (KAPPA,)}).poly == t(1) + KAPPA
    f2 = FrobeniusCoords.self_conjugate((2,))
    assert tau_ckp_reduced(3, f2).poly == schur_jt((3, 1, 1))


def test_reduced_single_class_formula():
    f = FrobeniusCoords.self_conjugate((5, 2))
    raw = gen_vector(4, 11)
    tau = tau_ckp_reduced(3, f, {2: raw})
    vec = tau.constants.column(1)
    c = lambda k: vec[k - 1] if k <= len(vec) else Poly()  # noqa: E731
    assert c(2) == 0
    xs = [c(2).scale(2), c(4).scale(2), c(6).scale(2), Poly()]
    assert c(8) == -elementary_schur(4, ArgSpec.of(xs)).scale(Fraction(1, 2))
    # odd entries are kept as given
    assert all(c(k) == raw[k - 1] for k in (1, 3, 5, 7, 9, 11))
    assert not reduced_constraint_residuals(3, (5, 2), {2: vec})


def test_reduced_family_one_assigns_c4():
    raw = gen_vector(1, 7)
    cc = solve_reduced_constraints(3, (3, 0), {0: raw})
    assert not reduced_constraint_residuals(3, (3, 0), cc)
    # c_4 = -s_2(2 c_2, 0) / 2 = -c_2**2, every other entry untouched
    vec = cc[0]
    assert vec[3] == -(vec[1] ** 2)
    assert [vec[k] for k in (0, 1, 2, 4, 5, 6)] == [Poly.coerce(raw[k]) for k in (0, 1, 2, 4, 5, 6)]


def test_reduced_single_a_is_unconstrained_at_p0():
    cc = {0: (KAPPA,)}
    assert solve_reduced_constraints(3, (0,), cc)[0] == (Poly.const(KAPPA),)


def test_reduced_multiclass_verify_only():
    f = FrobeniusCoords.self_conjugate((1, 0))
    assert tau_ckp_reduced(5, f).poly == S22
    with pytest.raises(ConstraintViolation) as exc:
        tau_ckp_reduced(5, f, {1: (1, 2, 3), 0: (Fraction(1, 2), 5)})
    assert "(i=1, j=2, p=0)" in str(exc.value)


def test_reduced_rejects_bad_input():
    with pytest.raises(ParameterError, match="condition"):
        tau_ckp_reduced(3, FrobeniusCoords.self_conjugate((1, 0)))
    with pytest.raises(ParameterError):
        tau_ckp_reduced(3, FrobeniusCoords((2,), (1,)))
    with pytest.raises(ParameterError):
        tau_ckp_reduced(3, FrobeniusCoords.self_conjugate((2,)), {2: gen_vector(0, 6)})
    with pytest.raises(ParameterError):
        tau_ckp_reduced(3, FrobeniusCoords.self_conjugate((2,)), {1: (1,)})


def test_reduced_tau_is_time_independent():
    f = FrobeniusCoords.self_conjugate((3, 0))
    tau = tau_ckp_reduced(3, f, {0: gen_vector(9, 7)})
    for k in (3, 6):
        assert tau.poly.diff(VarRef(Bank.T, k)) == Poly()


# -- BKP -------------------------------------------------------------------------

def test_bkp_examples():
    assert tau_bkp((1, 0)).poly == t(1) / 2
    assert tau_bkp((1,)).poly == t(1) / 2
    assert tau_bkp(()).poly == Poly.const(1)
    sq = tau_bkp((1, 0)).poly ** 2
    assert sq == restrict_odd(schur_jt((1, 1))).poly.scale(Fraction(1, 2))


def test_bkp_rejects_non_strict():
    with pytest.raises(ParameterError):
        tau_bkp((2, 2))
    with pytest.raises(ParameterError):
        tau_bkp((3, 0, 0))


def test_bkp_matrix_is_antisymmetric_with_constants():
    c = seeded(2, [7, 7, 7, 7])
    m = bkp_matrix((4, 3, 1), c)
    assert len(m) == 4
    for i in range(4):
        assert not m[i][i]
        for j in range(4):
            assert m[i][j] == -m[j][i]
    assert pfaffian_poly(m) ** 2 == det_poly(m)


def test_bkp_uses_odd_times_only():
    p = tau_bkp((3, 2), seeded(1, [6, 6])).poly
    assert all(v.index % 2 == 1 for v in p.variables() if v.bank == Bank.T)


def test_bkp_square_partition():
    assert bkp_square_partition((1, 0)) == Partition((1, 1))
    assert bkp_square_partition((3, 1)) == Partition((3, 2, 2, 1))
    assert bkp_square_partition(()) == Partition()
