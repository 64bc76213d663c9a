"""Chern characters, the Todd factor and the Chern <-> Hilbert conversion.

Hilbert polynomial of a class with Chern character ``ch``::

    P(t) = [x^d]  e^{tx} * ch(x) * (x / (1 - e^{-x}))^{d+1}
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .errors import DimensionMismatch
from .ktheory import ChernRank, KClass
from .numerical_poly import UniPoly, poly_to_combo
from .resolutions import chern_S_ell
from .series import (
    TruncatedSeries,
    coeff_at,
    series_exp,
    series_int_pow,
    series_inv,
    series_mul,
)


@dataclass(frozen=True)
class CharSeries:
    """``rank + sum_k ch_k x^k`` truncated at degree ``dim``."""

    dim: int
    series: TruncatedSeries

    @property
    def rank(self) -> Fraction:
        return self.series.coeffs[0]

    def ch(self, k: int) -> Fraction:
        return coeff_at(self.series, k)


@dataclass(frozen=True)
class ToddFactor:
    dim: int
    series: TruncatedSeries

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self.series.coeffs


def newton_power_sums(c: list, d: int) -> list:
    """Power sums ``p_1..p_d`` of formal roots with elementary symmetric ``c``.

    ``c[0]`` is ignored (it is 1); ``c[i]`` beyond the list length is zero.
    """
    def e(i):
        return c[i] if i < len(c) else 0

    p = [0]
    for k in range(1, d + 1):
        acc = (-1) ** (k - 1) * k * e(k)
        for i in range(1, k):
            acc += (-1) ** (i - 1) * e(i) * p[k - i]
        p.append(acc)
    return p[1:]


def chern_character(c: ChernRank) -> CharSeries:
    d = c.dim
    p = newton_power_sums(list(c.chern.coeffs), d)
    coeffs = [Fraction(c.rank)] + [Fraction(pk, factorial(k)) for k, pk in enumerate(p, 1)]
    return CharSeries(d, TruncatedSeries(coeffs))


def char_from_class(a: KClass) -> CharSeries:
    """``sum_m n_m e^{-mx}``, computed straight from the exponentials."""
    d = a.dim
    out = TruncatedSeries.zero(d)
    for m, nm in enumerate(a.n):
        if nm:
            out = out + nm * series_exp(TruncatedSeries.from_poly([0, -m], d))
    return CharSeries(d, out)


@lru_cache(maxsize=None)
def todd_factor(d: int) -> ToddFactor:
    if d < 0:
        raise ValueError("dimension must be non-negative")
    # (1 - e^{-x}) / x = sum_k (-1)^k x^k / (k+1)!
    base = TruncatedSeries(Fraction((-1) ** k, factorial(k + 1)) for k in range(d + 1))
    return ToddFactor(d, series_int_pow(series_inv(base), d + 1))


def phi(s: TruncatedSeries, d: int):
    """Coefficient of ``x^d`` in ``s`` times the Todd factor of P^d."""
    if s.bound != d:
        raise DimensionMismatch(f"series bound {s.bound} does not match dimension {d}")
    todd = todd_factor(d).coeffs
    # only the x^d coefficient of the product is needed
    return sum((s.coeffs[i] * todd[d - i] for i in range(d + 1)), Fraction(0))


@lru_cache(maxsize=None)
def exp_tx(d: int) -> TruncatedSeries:
    """``e^{tx}`` with polynomial coefficients ``t^k / k!``."""
    return TruncatedSeries(UniPoly.monomial(k, Fraction(1, factorial(k))) for k in range(d + 1))


def _as_poly(v) -> UniPoly:
    return v if isinstance(v, UniPoly) else UniPoly.constant(v)


def hilbert_from_chern(c: ChernRank) -> UniPoly:
    d = c.dim
    ch = chern_character(c).series
    return _as_poly(phi(series_mul(exp_tx(d), ch), d))


def chern_from_hilbert(p: UniPoly, d: int) -> ChernRank:
    """Inverse of :func:`hilbert_from_chern` through the S_l coordinates of ``p``.

    Only S_0 has nonzero rank, so the rank is the S_0 coordinate.
    """
    combo = poly_to_combo(p, d)
    chern = TruncatedSeries.one(d)
    for ell, a in enumerate(combo.a):
        if ell and a:
            chern = series_mul(chern, series_int_pow(chern_S_ell(ell, d), a))
    return ChernRank(d, chern, combo.a[0])


def hilbert_via_pcoeff(c: ChernRank) -> UniPoly:
    """Coefficient-wise assembly: ``[t^k] P = (1/k!) sum_i a_i ch_{d-k-i}`` with ``ch_0 = r``."""
    d = c.dim
    a = todd_factor(d).coeffs
    ch = chern_character(c).series.coeffs
    out = []
    for k in range(d + 1):
        j = d - k
        out.append(sum((a[i] * ch[j - i] for i in range(j + 1)), Fraction(0)) / factorial(k))
    return UniPoly(out)
