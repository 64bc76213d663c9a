"""Acceptance criteria. Every comparison is exact rational equality.

``pytest tests/test_acceptance.py`` (or running this file directly) ends
with one PASS/FAIL line per criterion.
"""
import random
import time
from fractions import Fraction
from functools import lru_cache
from math import comb

import pytest

from chernhilbert import (
    BettiTable,
    ChernRank,
    KClass,
    TruncatedSeries,
    UniPoly,
    binom_poly,
    chern_from_betti,
    chern_S_ell,
    class_from_betti,
    combo_to_poly,
    eta,
    eta_inv,
    hilbert_from_betti,
    hilbert_from_chern,
    hilbert_via_pcoeff,
    koszul_betti,
    series_int_pow,
    series_mul,
    todd_factor,
    twist_to_sl_combo,
    zeta,
    zeta_inv,
)
from chernhilbert.cli import main

DIMS = range(0, 9)
PER_DIM = 500


def _random_class(rng, d):
    return KClass(d, tuple(rng.randint(-20, 20) for _ in range(d + 1)))


@lru_cache(maxsize=None)
def sample_classes():
    rng = random.Random(20240611)
    return {d: [_random_class(rng, d) for _ in range(PER_DIM)] for d in DIMS}


@lru_cache(maxsize=None)
def sample_images():
    return {d: [zeta(a) for a in classes] for d, classes in sample_classes().items()}


@pytest.mark.criterion(1, "HRR consistency: hilbert_from_chern(zeta(a)) == eta(a), 500/d, d<=8, <30 s")
def test_criterion_1_hrr_consistency():
    start = time.perf_counter()
    for d in DIMS:
        for a in sample_classes()[d]:
            assert hilbert_from_chern(zeta(a)) == eta(a), a
    assert time.perf_counter() - start < 30.0


@pytest.mark.criterion(2, "isomorphism round trips for zeta and eta")
def test_criterion_2_round_trips():
    for d in DIMS:
        for a, z in zip(sample_classes()[d], sample_images()[d]):
            assert zeta_inv(z) == a
            assert eta_inv(eta(a), d) == a


@pytest.mark.criterion(3, "distinct classes have distinct (Chern, rank) and Hilbert polynomials")
def test_criterion_3_separation():
    rng = random.Random(3)
    for d in DIMS:
        for _ in range(PER_DIM):
            a, b = _random_class(rng, d), _random_class(rng, d)
            if a == b:
                continue
            assert zeta(a) != zeta(b)
            assert eta(a) != eta(b)
        structure = zeta(KClass.basis(0, d))
        for r in range(2, 6):
            multiple = zeta(KClass(d, (r,) + (0,) * d))
            assert multiple.chern == structure.chern == TruncatedSeries.one(d)
            assert multiple.rank != structure.rank
            assert multiple != structure


@pytest.mark.criterion(4, "twisted congruence 1-mx == prod C_S_l^((-1)^l binom(m,l)), m<=d<=8")
def test_criterion_4_twisted_congruence():
    for d in range(0, 9):
        for m in range(d + 1):
            rhs = TruncatedSeries.one(d)
            for ell in range(m + 1):
                rhs = series_mul(rhs, series_int_pow(chern_S_ell(ell, d), (-1) ** ell * comb(m, ell)))
            assert rhs == TruncatedSeries.from_poly([1, -m], d), (m, d)


@pytest.mark.criterion(5, "twisted Hilbert polynomial in the S_l basis and the Pascal step, m<=d<=10")
def test_criterion_5_polynomial_identities():
    for d in range(0, 11):
        for m in range(d + 1):
            lhs = binom_poly(d - m, d)
            explicit = sum(
                ((-1) ** ell * comb(m, ell) * binom_poly(d - ell, d - ell) for ell in range(m + 1)),
                UniPoly(),
            )
            assert lhs == explicit == combo_to_poly(twist_to_sl_combo(m, d))
            lower = binom_poly(d - m, d - 1) if d >= 1 else UniPoly()
            assert lhs == binom_poly(d - m + 1, d) - lower


@pytest.mark.criterion(6, "Todd factors for d=1,2; Hilbert polynomial of O is binom(t+d,d), d<=10")
def test_criterion_6_todd_values():
    assert todd_factor(1).coeffs == (1, 1)
    assert todd_factor(2).coeffs == (1, Fraction(3, 2), 1)
    for d in range(0, 11):
        assert hilbert_from_chern(ChernRank.from_coeffs([1], 1, d)) == binom_poly(d, d)


@pytest.mark.criterion(7, "coefficient formula route equals the Phi route on the criterion-1 sample")
def test_criterion_7_pcoeff_route():
    for d in DIMS:
        for z in sample_images()[d]:
            assert hilbert_via_pcoeff(z) == hilbert_from_chern(z)


@pytest.mark.criterion(8, "Koszul complex on d+1 variables gives the zero class, d<=8")
def test_criterion_8_koszul_zero_sheaf():
    for d in range(0, 9):
        b = koszul_betti(d + 1, d)
        cls = class_from_betti(b)
        assert cls == KClass.zero(d)
        assert chern_from_betti(b) == TruncatedSeries.one(d)
        assert zeta(cls).rank == 0
        assert hilbert_from_betti(b) == UniPoly()


@pytest.mark.criterion(9, "Betti-table invariants commute with zeta/eta, 210 tables, d<=6")
def test_criterion_9_resolution_commutation():
    rng = random.Random(9)
    count = 0
    for d in range(0, 7):
        for _ in range(30):
            keys = {(rng.randint(0, d + 1), rng.randint(-6, d + 6)) for _ in range(rng.randint(1, 12))}
            table = BettiTable(d, tuple((i, j, rng.randint(1, 6)) for i, j in keys))
            cls = class_from_betti(table)
            assert chern_from_betti(table) == zeta(cls).chern
            assert hilbert_from_betti(table) == eta(cls)
            count += 1
    assert count >= 200


@pytest.mark.criterion(10, "Whitney law zeta(a+b) = zeta(a)*zeta(b), 900 pairs")
def test_criterion_10_whitney():
    rng = random.Random(10)
    for d in DIMS:
        for _ in range(100):
            a, b = _random_class(rng, d), _random_class(rng, d)
            za, zb, zab = zeta(a), zeta(b), zeta(a + b)
            assert zab.chern == series_mul(za.chern, zb.chern)
            assert zab.rank == za.rank + zb.rank


@pytest.mark.criterion(11, "CLI golden outputs byte-exact; verify --dim-max 6 exits 0 in <60 s")
def test_criterion_11_cli(capsys):
    assert main(["chern2hilbert", "--dim", "2", "--chern", "1-x", "--rank", "1", "--format", "json"]) == 0
    assert capsys.readouterr().out == '{"dim": 2, "chern": "1-x", "rank": 1, "hilbert": "1/2*t^2 + 1/2*t"}\n'
    assert main(["hilbert2chern", "--dim", "2", "--hilbert", "t+1", "--format", "json"]) == 0
    assert capsys.readouterr().out == '{"dim": 2, "hilbert": "t + 1", "chern": "1+x+x^2", "rank": 0}\n'
    assert main(["todd", "--dim", "2"]) == 0
    assert capsys.readouterr().out == "dim   2\ntodd  [1, 3/2, 1]\n"
    start = time.perf_counter()
    assert main(["verify", "--dim-max", "6"]) == 0
    assert time.perf_counter() - start < 60.0


if __name__ == "__main__":
    import sys

    sys.exit(pytest.main(["-q", __file__]))
