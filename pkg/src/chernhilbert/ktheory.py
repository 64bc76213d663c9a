"""K(P^d) as the free abelian group on [O], [O(-1)], ..., [O(-d)].

``zeta`` sends a class to its (Chern polynomial, rank) pair and ``eta`` to
its Hilbert polynomial; both are isomorphisms onto their images and
``zeta_inv`` / ``eta_inv`` undo them.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Sequence

from .errors import (
    ChernHilbertError,
    DimensionMismatch,
    IndexOutOfRange,
    NotAUnit,
    NotRepresentable,
)
from .numerical_poly import (
    SlCombo,
    UniPoly,
    binom_poly,
    poly_to_combo,
)
from .series import TruncatedSeries, series_log, series_mul


@dataclass(frozen=True)
class KClass:
    """``sum_m n[m] * [O(-m)]`` on P^dim."""

    dim: int
    n: tuple[int, ...]

    def __post_init__(self):
        n = tuple(int(v) for v in self.n)
        if self.dim < 0:
            raise ValueError("dimension must be non-negative")
        if len(n) != self.dim + 1:
            raise ValueError(f"KClass on P^{self.dim} needs {self.dim + 1} entries, got {len(n)}")
        object.__setattr__(self, "n", n)

    @classmethod
    def zero(cls, d: int) -> "KClass":
        return cls(d, (0,) * (d + 1))

    @classmethod
    def basis(cls, m: int, d: int) -> "KClass":
        if not 0 <= m <= d:
            raise IndexOutOfRange(f"[O(-{m})] is not a basis element on P^{d}")
        n = [0] * (d + 1)
        n[m] = 1
        return cls(d, tuple(n))

    @property
    def rank(self) -> int:
        return sum(self.n)

    def __add__(self, other):
        if not isinstance(other, KClass):
            return NotImplemented
        return k_add(self, other)

    def __neg__(self):
        return k_neg(self)

    def __sub__(self, other):
        if not isinstance(other, KClass):
            return NotImplemented
        return k_add(self, k_neg(other))

    def __mul__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        return KClass(self.dim, tuple(k * v for v in self.n))

    __rmul__ = __mul__


@dataclass(frozen=True)
class ChernRank:
    """An element of A = A_0 x Z: a Chern polynomial mod x^(d+1) and a rank."""

    dim: int
    chern: TruncatedSeries
    rank: int

    def __post_init__(self):
        if self.chern.bound != self.dim:
            raise DimensionMismatch(f"Chern series has bound {self.chern.bound}, expected {self.dim}")
        if self.chern.coeffs[0] != 1:
            raise NotAUnit(f"Chern polynomial must have constant term 1, got {self.chern.coeffs[0]}")
        if not self.chern.is_integral():
            raise ChernHilbertError("Chern polynomial must have integer coefficients")
        object.__setattr__(self, "rank", int(self.rank))

    @classmethod
    def from_coeffs(cls, coeffs: Sequence, rank: int, d: int) -> "ChernRank":
        return cls(d, TruncatedSeries.from_poly(coeffs, d), rank)


def _same_dim(a: KClass, b: KClass) -> None:
    if a.dim != b.dim:
        raise DimensionMismatch(f"classes live on P^{a.dim} and P^{b.dim}")


def k_add(a: KClass, b: KClass) -> KClass:
    _same_dim(a, b)
    return KClass(a.dim, tuple(x + y for x, y in zip(a.n, b.n)))


def k_neg(a: KClass) -> KClass:
    return KClass(a.dim, tuple(-x for x in a.n))


@lru_cache(maxsize=4096)
def reduce_twist(m: int, d: int) -> KClass:
    """Express [O(-m)] in the basis [O], ..., [O(-d)] for any integer ``m``.

    Uses the Koszul relation ``sum_{i=0}^{d+1} (-1)^i binom(d+1, i) [O(-n-i)] = 0``
    to walk one twist at a time away from the basis window.
    """
    if d < 0:
        raise ValueError("dimension must be non-negative")
    if 0 <= m <= d:
        return KClass.basis(m, d)
    rel = [(-1) ** i * comb(d + 1, i) for i in range(d + 2)]
    # window[k] holds the class of O(-(lo + k)) for d+1 consecutive twists
    window = [KClass.basis(k, d).n for k in range(d + 1)]
    if m > d:
        for _ in range(m - d):
            # [O(-n-d-1)] = -(-1)^(d+1) * sum_{i<=d} rel_i [O(-n-i)]
            s = -rel[d + 1]
            new = tuple(s * sum(rel[i] * window[i][j] for i in range(d + 1)) for j in range(d + 1))
            window = window[1:] + [new]
        return KClass(d, window[-1])
    for _ in range(-m):
        # [O(-n)] = -sum_{i>=1} rel_i [O(-n-i)]
        new = tuple(-sum(rel[i + 1] * window[i][j] for i in range(d + 1)) for j in range(d + 1))
        window = [new] + window[:-1]
    return KClass(d, window[0])


def sl_class(ell: int, d: int) -> KClass:
    """Class of S_l = S/(l variables) from its Koszul resolution."""
    if not 0 <= ell <= d:
        raise IndexOutOfRange(f"S_{ell} is not defined on P^{d}")
    return KClass(d, tuple((-1) ** i * comb(ell, i) for i in range(d + 1)))


def combo_to_class(c: SlCombo) -> KClass:
    d = c.dim
    out = KClass.zero(d)
    for ell, a in enumerate(c.a):
        if a:
            out = out + a * sl_class(ell, d)
    return out


def class_to_combo(a: KClass) -> SlCombo:
    # column l of the change-of-basis matrix is sl_class(l): upper triangular, diagonal (-1)^l
    d = a.dim
    cols = [sl_class(ell, d).n for ell in range(d + 1)]
    out = [0] * (d + 1)
    for ell in range(d, -1, -1):
        rest = a.n[ell] - sum(cols[j][ell] * out[j] for j in range(ell + 1, d + 1))
        out[ell] = rest * cols[ell][ell]  # diagonal entry is its own inverse
    return SlCombo(d, tuple(out))


def change_basis(c: KClass | SlCombo) -> SlCombo | KClass:
    """Switch between the [O(-m)] coordinates and the [S_l] coordinates."""
    if isinstance(c, KClass):
        return class_to_combo(c)
    if isinstance(c, SlCombo):
        return combo_to_class(c)
    raise TypeError(f"expected KClass or SlCombo, got {type(c).__name__}")


def line_power(m: int, e: int, d: int) -> TruncatedSeries:
    """``(1 - m x)^e`` mod ``x^(d+1)`` from the (negative) binomial series."""
    if e >= 0:
        return TruncatedSeries(comb(e, k) * (-m) ** k for k in range(d + 1))
    return TruncatedSeries(comb(-e + k - 1, k) * m**k for k in range(d + 1))


def zeta(a: KClass) -> ChernRank:
    d = a.dim
    chern = TruncatedSeries.one(d)
    for m, nm in enumerate(a.n):
        if m and nm:
            chern = series_mul(chern, line_power(m, nm, d))
    return ChernRank(d, chern, a.rank)


def eta(a: KClass) -> UniPoly:
    d = a.dim
    out = UniPoly()
    for m, nm in enumerate(a.n):
        if nm:
            out = out + nm * binom_poly(d - m, d)
    return out


def solve_exact(matrix: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction]:
    """Gaussian elimination over the rationals for a square nonsingular system."""
    n = len(rhs)
    rows = [list(map(Fraction, row)) + [Fraction(b)] for row, b in zip(matrix, rhs)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if rows[r][col] != 0), None)
        if pivot is None:
            raise ZeroDivisionError("singular system")
        rows[col], rows[pivot] = rows[pivot], rows[col]
        p = rows[col][col]
        rows[col] = [v / p for v in rows[col]]
        for r in range(n):
            if r != col and rows[r][col] != 0:
                f = rows[r][col]
                rows[r] = [v - f * w for v, w in zip(rows[r], rows[col])]
    return [rows[r][n] for r in range(n)]


@lru_cache(maxsize=None)
def _vandermonde_inverse(d: int) -> tuple[tuple[Fraction, ...], ...]:
    """Exact inverse of ``V[k][m] = m^k`` (``k, m = 1..d``), one column solve per unit vector."""
    vander = [[Fraction(m) ** k for m in range(1, d + 1)] for k in range(1, d + 1)]
    cols = [solve_exact(vander, [Fraction(int(i == j)) for i in range(d)]) for j in range(d)]
    return tuple(tuple(cols[j][i] for j in range(d)) for i in range(d))


def zeta_inv(c: ChernRank) -> KClass:
    """Recover the class with a given (Chern polynomial, rank).

    log C = sum_m r_m log(1 - m x) makes the power sums
    ``p_k = sum_m r_m m^k`` readable from the logarithm; the exponents
    ``r_1..r_d`` then solve a Vandermonde system.
    """
    d = c.dim
    if c.chern.coeffs[0] != 1:
        raise NotAUnit("Chern polynomial must have constant term 1")
    if d == 0:
        return KClass(0, (c.rank,))
    log = series_log(c.chern)
    p = [-k * log.coeffs[k] for k in range(1, d + 1)]
    inv = _vandermonde_inverse(d)
    r = [sum((w * pk for w, pk in zip(row, p) if w), Fraction(0)) for row in inv]
    if any(v.denominator != 1 for v in r):
        raise NotRepresentable(
            f"exponents {[str(v) for v in r]} are not integers; "
            f"the Chern polynomial is not in the image of K(P^{d})"
        )
    tail = [int(v) for v in r]
    out = KClass(d, (c.rank - sum(tail), *tail))
    if zeta(out) != c:  # pragma: no cover - log is injective on 1 + xQ[[x]]
        raise NotRepresentable("reconstructed class does not reproduce the input")
    return out


def eta_inv(p: UniPoly, d: int) -> KClass:
    return combo_to_class(poly_to_combo(p, d))
