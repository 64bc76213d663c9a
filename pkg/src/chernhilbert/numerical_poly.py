"""Rational polynomials in the Hilbert variable ``t`` and the binomial bases.

The Hilbert-polynomial group of P^d is the free abelian group on the
polynomials ``binom(t + d - l, d - l)``, ``l = 0..d``.  Membership in it is
decided by exact peeling against that basis (:func:`poly_to_combo`).
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from fractions import Fraction
from math import comb, factorial
from numbers import Rational
from typing import Iterable

from .errors import DegreeTooHigh, NotAUnit, NotInHilbertLattice


def _frac(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, (int, Rational)):
        return Fraction(c)
    raise TypeError(f"expected an exact rational, got {type(c).__name__}")


class UniPoly:
    """Immutable polynomial with :class:`~fractions.Fraction` coefficients.

    ``coeffs[k]`` is the coefficient of ``t**k``; trailing zeros are stripped so
    the zero polynomial has ``coeffs == ()``.  Plain ints and Fractions compare
    equal to the matching constant polynomial, which lets a UniPoly sit in the
    same coefficient slot as a rational inside a truncated series.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [_frac(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("UniPoly is immutable")

    @classmethod
    def constant(cls, c) -> "UniPoly":
        return cls((c,))

    @classmethod
    def monomial(cls, k: int, c=1) -> "UniPoly":
        return cls([0] * k + [c])

    @property
    def degree(self) -> int:
        """Degree; -1 stands in for minus infinity on the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    @staticmethod
    def _lift(other) -> "UniPoly | None":
        if isinstance(other, UniPoly):
            return other
        if isinstance(other, (int, Rational)):
            return UniPoly((other,))
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        n = max(len(self.coeffs), len(o.coeffs))
        return UniPoly(self.coeff(k) + o.coeff(k) for k in range(n))

    __radd__ = __add__

    def __neg__(self):
        return UniPoly(-c for c in self.coeffs)

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Rational)):
            if other == 0:
                return UniPoly()
            return UniPoly(c * other for c in self.coeffs)
        if not isinstance(other, UniPoly):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return UniPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return UniPoly(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if not isinstance(other, (int, Rational)):
            return NotImplemented
        q = _frac(other)
        return UniPoly(c / q for c in self.coeffs)

    def inverse(self) -> "UniPoly":
        """Multiplicative inverse; only nonzero constants are units."""
        if self.degree != 0:
            raise NotAUnit(f"{self} is not a unit of Q[t]")
        return UniPoly((1 / self.coeffs[0],))

    def __call__(self, x):
        return poly_eval(self, x)

    def __eq__(self, other):
        if isinstance(other, UniPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Rational)):
            if not self.coeffs:
                return other == 0
            return len(self.coeffs) == 1 and self.coeffs[0] == other
        return NotImplemented

    def __hash__(self):
        if len(self.coeffs) <= 1:
            return hash(self.coeff(0))
        return hash(self.coeffs)

    def __repr__(self):
        return f"UniPoly({[str(c) for c in self.coeffs]})"

    def __str__(self):
        from .expr import format_descending

        return format_descending(self.coeffs, "t")


def poly_eval(p: UniPoly, n) -> Fraction:
    """Horner evaluation at an exact rational point."""
    x = _frac(n)
    acc = Fraction(0)
    for c in reversed(p.coeffs):
        acc = acc * x + c
    return acc


@lru_cache(maxsize=8192)
def binom_poly(shift: int, k: int) -> UniPoly:
    """``binom(t + shift, k)`` as a polynomial in ``t`` of degree exactly ``k``."""
    if k < 0:
        raise ValueError("k must be non-negative")
    p = UniPoly((1,))
    for i in range(1, k + 1):
        p = p * UniPoly((shift - i + 1, 1))
    return p / factorial(k)


@dataclass(frozen=True)
class SlCombo:
    """Integer coordinates ``a_0..a_d`` in the basis ``binom(t+d-l, d-l)``."""

    dim: int
    a: tuple[int, ...]

    def __post_init__(self):
        a = tuple(int(x) for x in self.a)
        if len(a) != self.dim + 1:
            raise ValueError(f"SlCombo on P^{self.dim} needs {self.dim + 1} entries, got {len(a)}")
        object.__setattr__(self, "a", a)


def combo_to_poly(c: SlCombo) -> UniPoly:
    d = c.dim
    out = UniPoly()
    for ell, a in enumerate(c.a):
        if a:
            out = out + a * binom_poly(d - ell, d - ell)
    return out


def poly_to_combo(p: UniPoly, d: int) -> SlCombo:
    """Express ``p`` over the S_l basis, or raise if it is not in the lattice.

    Basis element ``l`` has degree ``d - l`` and leading coefficient
    ``1/(d-l)!``, so the top coefficient of the running remainder fixes one
    coordinate at a time.
    """
    if p.degree > d:
        raise DegreeTooHigh(f"degree {p.degree} exceeds dimension {d}")
    rem = p
    a = []
    for ell in range(d + 1):
        k = d - ell
        coef = rem.coeff(k) * factorial(k)
        if coef.denominator != 1:
            raise NotInHilbertLattice(
                f"{p} is not an integer combination of Hilbert polynomials on P^{d}"
            )
        a.append(int(coef))
        if coef:
            rem = rem - coef * binom_poly(k, k)
    if not rem.is_zero():  # pragma: no cover - the loop clears every degree
        raise NotInHilbertLattice(f"nonzero remainder {rem}")
    return SlCombo(d, tuple(a))


def twist_to_sl_combo(m: int, d: int) -> SlCombo:
    """Coordinates of the Hilbert polynomial of O(-m): ``(-1)^l binom(m, l)``."""
    if m < 0:
        raise ValueError("m must be non-negative")
    if m > d:
        raise DegreeTooHigh(f"O(-{m}) needs S_l with l > {d}")
    return SlCombo(d, tuple((-1) ** ell * comb(m, ell) for ell in range(d + 1)))
