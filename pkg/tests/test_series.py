from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from chernhilbert import (
    DimensionMismatch,
    IndexOutOfRange,
    NotAUnit,
    NotNilpotent,
    NotNormalized,
    TruncatedSeries,
    UniPoly,
    coeff_at,
    series_exp,
    series_int_pow,
    series_inv,
    series_log,
    series_mul,
)
from conftest import series, series_pair, unit_series


def S(*cs):
    return TruncatedSeries(cs)


def naive_mul(a, b):
    """Full polynomial product, truncated afterwards."""
    full = {}
    for i, x in enumerate(a.coeffs):
        for j, y in enumerate(b.coeffs):
            full[i + j] = full.get(i + j, 0) + x * y
    return TruncatedSeries(full.get(k, 0) for k in range(a.bound + 1))


def naive_pow(s, n):
    out = TruncatedSeries.one(s.bound)
    for _ in range(n):
        out = naive_mul(out, s)
    return out


def taylor_exp(s):
    # s nilpotent mod x^(d+1): exp(s) = sum_{k<=d} s^k / k!
    out, term = TruncatedSeries.one(s.bound), TruncatedSeries.one(s.bound)
    for k in range(1, s.bound + 1):
        term = naive_mul(term, s).scale(F(1, k))
        out = out + term
    return out


def mercator_log(s):
    u = s - TruncatedSeries.one(s.bound)
    out, term = TruncatedSeries.zero(s.bound), TruncatedSeries.one(s.bound)
    for k in range(1, s.bound + 1):
        term = naive_mul(term, u)
        out = out + term.scale(F((-1) ** (k + 1), k))
    return out


class TestExamples:
    def test_mul_identity(self):
        s = S(1, -3, 2)
        assert series_mul(TruncatedSeries.one(2), s) == s

    def test_mul(self):
        assert series_mul(S(1, -1, 0), S(1, -2, 0)) == S(1, -3, 2)

    def test_mul_telescoping(self):
        assert series_mul(S(1, -1, 0, 0), S(1, 1, 1, 1)) == TruncatedSeries.one(3)

    def test_inv(self):
        assert series_inv(TruncatedSeries.one(3)) == TruncatedSeries.one(3)
        assert series_inv(S(1, -1, 0, 0)) == S(1, 1, 1, 1)
        assert series_inv(S(1, -2, 0)) == S(1, 2, 4)

    def test_pow(self):
        assert series_int_pow(S(1, -1, 0, 0), 2) == S(1, -2, 1, 0)
        assert series_int_pow(S(1, -1, 0), -3) == S(1, 3, 6)
        assert series_int_pow(S(5, 7, 1), 0) == TruncatedSeries.one(2)

    def test_log(self):
        assert series_log(TruncatedSeries.one(3)) == TruncatedSeries.zero(3)
        assert series_log(S(1, -1, 0, 0)) == S(0, -1, F(-1, 2), F(-1, 3))
        assert series_log(S(1, -3, 2)) == S(0, -3, F(-5, 2))

    def test_exp(self):
        assert series_exp(TruncatedSeries.zero(2)) == TruncatedSeries.one(2)
        assert series_exp(S(0, -1, 0)) == S(1, -1, F(1, 2))
        assert series_mul(series_exp(S(0, -1, 0)), series_exp(S(0, 1, 0))) == TruncatedSeries.one(2)

    def test_coeff_at(self):
        assert coeff_at(S(1, -3, 2), 1) == -3
        assert coeff_at(TruncatedSeries.one(2), 2) == 0
        assert coeff_at(series_inv(S(1, -2, 0)), 2) == 4


class TestErrors:
    def test_bound_mismatch(self):
        with pytest.raises(DimensionMismatch):
            series_mul(S(1, 1), S(1, 1, 1))

    def test_not_a_unit(self):
        with pytest.raises(NotAUnit):
            series_inv(S(0, 1, 1))
        with pytest.raises(NotAUnit):
            series_int_pow(S(0, 1), -1)

    def test_log_not_normalized(self):
        with pytest.raises(NotNormalized):
            series_log(S(2, 1))

    def test_exp_not_nilpotent(self):
        with pytest.raises(NotNilpotent):
            series_exp(S(1, 1))

    @pytest.mark.parametrize("k", [-1, 3])
    def test_index(self, k):
        with pytest.raises(IndexOutOfRange):
            coeff_at(S(1, 2, 3), k)

    def test_immutable(self):
        with pytest.raises(AttributeError):
            S(1).coeffs = (2,)


@given(series_pair())
def test_mul_matches_naive(pair):
    a, b = pair
    assert series_mul(a, b) == naive_mul(a, b)


@given(series_pair(3))
def test_ring_laws(triple):
    a, b, c = triple
    assert series_mul(a, b) == series_mul(b, a)
    assert series_mul(series_mul(a, b), c) == series_mul(a, series_mul(b, c))
    assert series_mul(a, b + c) == series_mul(a, b) + series_mul(a, c)


@given(unit_series())
def test_inverse_law(s):
    assert series_mul(s, series_inv(s)) == TruncatedSeries.one(s.bound)


@given(unit_series(), st.integers(-6, 6), st.integers(-6, 6))
def test_pow_adds_exponents(s, a, b):
    assert series_int_pow(s, a + b) == series_mul(series_int_pow(s, a), series_int_pow(s, b))


@given(series(), st.integers(0, 7))
def test_pow_matches_repeated_mul(s, n):
    assert series_int_pow(s, n) == naive_pow(s, n)


@given(series(const=1))
def test_log_matches_mercator(s):
    assert series_log(s) == mercator_log(s)


@given(series(const=0))
def test_exp_matches_taylor(s):
    assert series_exp(s) == taylor_exp(s)


@given(series(const=1))
def test_exp_log_identity(s):
    assert series_exp(series_log(s)) == s


@given(series(const=0))
def test_log_exp_identity(s):
    assert series_log(series_exp(s)) == s


@given(series_pair(const=1))
def test_log_of_product(pair):
    a, b = pair
    assert series_log(series_mul(a, b)) == series_log(a) + series_log(b)


def test_polynomial_coefficients_lift():
    t = UniPoly([0, 1])
    etx = TruncatedSeries([1, t, t * t / 2])
    prod = series_mul(etx, S(1, 1, 0))
    assert prod == TruncatedSeries([1, t + 1, t * t / 2 + t])
    assert series_mul(S(1, 1, 0), etx) == prod


def test_polynomial_domain_inverse_and_log():
    t = UniPoly([0, 1])
    s = TruncatedSeries([1, t, 0])
    assert series_mul(s, series_inv(s)) == TruncatedSeries.one(2)
    assert series_exp(series_log(s)) == s
    with pytest.raises(NotAUnit):
        series_inv(TruncatedSeries([t, 1]))
