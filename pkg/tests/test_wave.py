import pytest

from polytau.errors import ParameterError
from polytau.partitions import FrobeniusCoords, Partition, partitions_up_to, to_frobenius
from polytau.polyring import LaurentPoly, Poly, miwa_shift, t
from polytau.schur import schur_jt
from polytau.seeds import SeedSpec, gen_constants
from polytau.tauforge import (
    ConstMatrix,
    Family,
    TauPoly,
    shape_giambelli,
    shape_kp_jt,
    tau_ckp,
    tau_kp_giambelli,
    tau_kp_jt,
)
from polytau.wave import WaveRoute, WaveSymbol, cross_check_wave, p_symbol, wave_giambelli_det, wave_jt_det

ONE = LaurentPoly({0: 1})


def seeded(seed, shape):
    return gen_constants(SeedSpec(seed, tuple(shape)))


def test_wave_symbol_invariants():
    with pytest.raises(ParameterError):
        WaveSymbol(ONE, Poly())
    with pytest.raises(ParameterError):
        WaveSymbol(LaurentPoly({1: t(1)}), t(1))
    assert WaveSymbol(LaurentPoly({0: t(1), -1: -1}), t(1)).is_monic()


def test_p_symbol_examples():
    w = p_symbol(Poly.const(1))
    assert w.numerator == ONE and w.denominator == 1
    w = p_symbol(t(1))
    assert w.numerator == LaurentPoly({0: t(1), -1: -1}) and w.denominator == t(1)
    s11 = schur_jt((1, 1))
    w = p_symbol(s11)
    assert w.numerator == miwa_shift(s11) and w.numerator[0] == s11
    assert w.numerator[-1] == -t(1)
    with pytest.raises(ParameterError):
        p_symbol(Poly())


def test_jt_examples():
    w = wave_jt_det(())
    assert w.numerator == ONE and w.denominator == 1
    w = wave_jt_det((1,))
    assert w.numerator == LaurentPoly({0: t(1), -1: -1}) and w.denominator == t(1)
    with pytest.raises(ParameterError):
        wave_jt_det((1,), ConstMatrix(((1, 2),)))


def test_giambelli_examples():
    w = wave_giambelli_det(FrobeniusCoords((), ()))
    assert w.numerator == ONE
    w = wave_giambelli_det(FrobeniusCoords((0,), (0,)))
    assert w.numerator == LaurentPoly({0: t(1), -1: -1})
    w = wave_giambelli_det(FrobeniusCoords((1, 0), (1, 0)))
    assert w.numerator == miwa_shift(schur_jt((2, 2)))
    with pytest.raises(ParameterError):
        wave_giambelli_det((1, 0))


def test_cross_check_examples():
    for lam in [(), (1,)]:
        r = cross_check_wave(tau_kp_jt(lam), WaveRoute.JT)
        assert r.passed and r.stats["scalar"] == 1
    r = cross_check_wave(tau_kp_giambelli(FrobeniusCoords((), ())), "giambelli")
    assert r.passed and r.stats["scalar"] == 1


@pytest.mark.parametrize("lam", [(2, 2), (3, 1), (2, 1, 1), (4,)])
def test_cross_check_seeded(lam):
    f = to_frobenius(lam)
    cb, db = shape_giambelli(f)
    for seed in range(4):
        jt = tau_kp_jt(lam, seeded(seed, shape_kp_jt(lam)))
        gb = tau_kp_giambelli(f, seeded(seed, cb), seeded(seed + 1, db))
        for tau, route in ((jt, "jt"), (gb, "giambelli")):
            r = cross_check_wave(tau, route)
            assert r.passed and r.stats["monic"]
            assert all(-tau.poly.wdeg() <= k <= 0 for k in r.stats["zpowers"])


def test_jt_numerator_is_monic_for_small_partitions():
    for lam in partitions_up_to(5):
        w = wave_jt_det(lam)
        assert w.numerator[0] == w.denominator == schur_jt(lam)


def test_cross_check_reports_witness():
    # right data, wrong polynomial: the determinant sees lam=(1), c=0
    forged = TauPoly(t(1) + 5, Family.KP_JT, Partition((1,)), ConstMatrix.zero())
    r = cross_check_wave(forged, "jt")
    assert not r.passed
    witness = r.stats["witness"]
    assert isinstance(witness, LaurentPoly) and witness
    assert r.residual == witness[witness.min_power()]


def test_cross_check_family_mismatch():
    with pytest.raises(ParameterError):
        cross_check_wave(tau_ckp((1, 0)), "jt")
    with pytest.raises(ParameterError):
        cross_check_wave(tau_kp_jt((1,)), "giambelli")
    with pytest.raises(ValueError):
        cross_check_wave(tau_kp_jt((1,)), "pfaffian")
