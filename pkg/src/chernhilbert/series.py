"""Exact truncated power series, elements of R[x]/x^(d+1).

Coefficients are :class:`~fractions.Fraction` or
:class:`~chernhilbert.numerical_poly.UniPoly`.  A rational series multiplied
by a UniPoly series lifts into the UniPoly domain through ordinary operator
dispatch, so mixed products need no special casing.
"""
from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Iterable

from .errors import (
    DimensionMismatch,
    IndexOutOfRange,
    NotAUnit,
    NotNilpotent,
    NotNormalized,
)


def _coerce(c):
    if isinstance(c, Fraction):
        return c
    if isinstance(c, (int, Rational)):
        return Fraction(c)
    return c


def _invert(c):
    if isinstance(c, Fraction):
        if c == 0:
            raise NotAUnit("constant term is zero")
        return 1 / c
    return c.inverse()


class TruncatedSeries:
    """Dense vector ``c_0..c_d``; arithmetic is performed modulo ``x**(d+1)``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable):
        cs = tuple(_coerce(c) for c in coeffs)
        if not cs:
            raise ValueError("a truncated series needs at least one coefficient")
        object.__setattr__(self, "coeffs", cs)

    def __setattr__(self, name, value):
        raise AttributeError("TruncatedSeries is immutable")

    @classmethod
    def one(cls, bound: int) -> "TruncatedSeries":
        return cls([1] + [0] * bound)

    @classmethod
    def zero(cls, bound: int) -> "TruncatedSeries":
        return cls([0] * (bound + 1))

    @classmethod
    def from_poly(cls, coeffs, bound: int) -> "TruncatedSeries":
        """Reduce a coefficient list of any length modulo ``x**(bound+1)``."""
        cs = list(coeffs)[: bound + 1]
        return cls(cs + [0] * (bound + 1 - len(cs)))

    @property
    def bound(self) -> int:
        return len(self.coeffs) - 1

    def is_integral(self) -> bool:
        return all(isinstance(c, Fraction) and c.denominator == 1 for c in self.coeffs)

    def _check(self, other: "TruncatedSeries"):
        if not isinstance(other, TruncatedSeries):
            return False
        if other.bound != self.bound:
            raise DimensionMismatch(f"bounds {self.bound} and {other.bound} differ")
        return True

    def __add__(self, other):
        if not self._check(other):
            return NotImplemented
        return TruncatedSeries(a + b for a, b in zip(self.coeffs, other.coeffs))

    def __sub__(self, other):
        if not self._check(other):
            return NotImplemented
        return TruncatedSeries(a - b for a, b in zip(self.coeffs, other.coeffs))

    def __neg__(self):
        return TruncatedSeries(-c for c in self.coeffs)

    def scale(self, k) -> "TruncatedSeries":
        return TruncatedSeries(k * c for c in self.coeffs)

    def __mul__(self, other):
        if isinstance(other, TruncatedSeries):
            return series_mul(self, other)
        if isinstance(other, (int, Rational)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Rational)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, n: int):
        return series_int_pow(self, n)

    def __getitem__(self, k: int):
        return coeff_at(self, k)

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"TruncatedSeries([{', '.join(str(c) for c in self.coeffs)}])"


def _numerators(s: TruncatedSeries) -> list[int] | None:
    out = []
    for c in s.coeffs:
        if not isinstance(c, Fraction) or c.denominator != 1:
            return None
        out.append(c.numerator)
    return out


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    if a.bound != b.bound:
        raise DimensionMismatch(f"bounds {a.bound} and {b.bound} differ")
    n = a.bound + 1
    out = [0] * n
    ia, ib = _numerators(a), _numerators(b)
    if ia is not None and ib is not None:
        # plain int arithmetic; Fraction overhead dominates otherwise
        for i, ai in enumerate(ia):
            if ai:
                for j in range(n - i):
                    out[i + j] += ai * ib[j]
        return TruncatedSeries(out)
    for i, ai in enumerate(a.coeffs):
        if ai == 0:
            continue
        for j in range(n - i):
            bj = b.coeffs[j]
            if bj != 0:
                out[i + j] = out[i + j] + ai * bj
    return TruncatedSeries(out)


def series_inv(s: TruncatedSeries) -> TruncatedSeries:
    """Inverse via ``c'_k = -(1/c_0) * sum_{i=1..k} c_i c'_{k-i}``."""
    c = s.coeffs
    u = _invert(c[0])
    out = [u]
    for k in range(1, len(c)):
        acc = 0
        for i in range(1, k + 1):
            if c[i] != 0:
                acc = acc + c[i] * out[k - i]
        out.append(-u * acc)
    return TruncatedSeries(out)


def series_int_pow(s: TruncatedSeries, n: int) -> TruncatedSeries:
    """``s**n`` by binary exponentiation; negative ``n`` inverts first."""
    if n < 0:
        s = series_inv(s)
        n = -n
    result = TruncatedSeries.one(s.bound)
    base = s
    while n:
        if n & 1:
            result = series_mul(result, base)
        n >>= 1
        if n:
            base = series_mul(base, base)
    return result


def series_log(s: TruncatedSeries) -> TruncatedSeries:
    # s' = s * L'  =>  k L_k = k s_k - sum_{i=1}^{k-1} i L_i s_{k-i}
    c = s.coeffs
    if c[0] != 1:
        raise NotNormalized(f"log needs constant term 1, got {c[0]}")
    out = [Fraction(0)]
    for k in range(1, len(c)):
        acc = k * c[k]
        for i in range(1, k):
            if out[i] != 0 and c[k - i] != 0:
                acc = acc - i * out[i] * c[k - i]
        out.append(acc / k)
    return TruncatedSeries(out)


def series_exp(s: TruncatedSeries) -> TruncatedSeries:
    # E' = E * s'  =>  k E_k = sum_{i=1}^{k} i s_i E_{k-i}
    c = s.coeffs
    if c[0] != 0:
        raise NotNilpotent(f"exp needs constant term 0, got {c[0]}")
    out = [Fraction(1)]
    for k in range(1, len(c)):
        acc = Fraction(0)
        for i in range(1, k + 1):
            if c[i] != 0:
                acc = acc + i * c[i] * out[k - i]
        out.append(acc / k)
    return TruncatedSeries(out)


def coeff_at(s: TruncatedSeries, k: int):
    if not 0 <= k <= s.bound:
        raise IndexOutOfRange(f"index {k} outside 0..{s.bound}")
    return s.coeffs[k]
