"""Graded free resolutions given as Betti tables.

A table lists multiplicities ``beta[i, j]`` of ``O(-j)`` in homological
degree ``i``.  Exactness of the resolution is not checked; the functions
compute the invariants the table implies.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from math import comb

from .errors import IndexOutOfRange, InvalidBettiTable
from .ktheory import KClass, reduce_twist
from .numerical_poly import UniPoly, binom_poly
from .series import TruncatedSeries, series_int_pow, series_inv, series_mul


@dataclass(frozen=True)
class BettiTable:
    dim: int
    entries: tuple[tuple[int, int, int], ...]

    def __post_init__(self):
        if self.dim < 0:
            raise InvalidBettiTable("dimension must be non-negative")
        seen = set()
        clean = []
        for entry in self.entries:
            try:
                i, j, count = (int(v) for v in entry)
            except (TypeError, ValueError) as exc:
                raise InvalidBettiTable(f"malformed entry {entry!r}") from exc
            if i < 0 or i > self.dim + 1:
                raise InvalidBettiTable(f"homological degree {i} outside 0..{self.dim + 1}")
            if count <= 0:
                raise InvalidBettiTable(f"beta[{i},{j}] must be positive, got {count}")
            if (i, j) in seen:
                raise InvalidBettiTable(f"duplicate entry for (i={i}, j={j})")
            seen.add((i, j))
            clean.append((i, j, count))
        object.__setattr__(self, "entries", tuple(sorted(clean)))

    @classmethod
    def from_dict(cls, data: dict) -> "BettiTable":
        try:
            dim = data["dim"]
            rows = data["betti"]
            entries = [(row["i"], row["j"], row["count"]) for row in rows]
        except (KeyError, TypeError) as exc:
            raise InvalidBettiTable(f"malformed Betti table: {exc}") from exc
        for value in [dim, *(v for e in entries for v in e)]:
            if not isinstance(value, int) or isinstance(value, bool):
                raise InvalidBettiTable(f"expected an integer, got {value!r}")
        return cls(dim, tuple(entries))

    @classmethod
    def from_json(cls, text: str) -> "BettiTable":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise InvalidBettiTable(f"invalid JSON: {exc}") from exc
        return cls.from_dict(data)

    def to_dict(self) -> dict:
        return {
            "dim": self.dim,
            "betti": [{"i": i, "j": j, "count": c} for i, j, c in self.entries],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    def shifted(self, s: int) -> "BettiTable":
        """Same table with every twist ``j`` replaced by ``j + s``."""
        return BettiTable(self.dim, tuple((i, j + s, c) for i, j, c in self.entries))


def class_from_betti(b: BettiTable) -> KClass:
    out = KClass.zero(b.dim)
    for i, j, count in b.entries:
        out = out + ((-1) ** i * count) * reduce_twist(j, b.dim)
    return out


def _line_factor(j: int, d: int) -> TruncatedSeries:
    return TruncatedSeries.from_poly([1, -j], d)


def chern_from_betti(b: BettiTable) -> TruncatedSeries:
    """Even homological degrees over odd ones, each ``O(-j)`` contributing ``1 - jx``."""
    d = b.dim
    even = TruncatedSeries.one(d)
    odd = TruncatedSeries.one(d)
    for i, j, count in b.entries:
        factor = series_int_pow(_line_factor(j, d), count)
        if i % 2:
            odd = series_mul(odd, factor)
        else:
            even = series_mul(even, factor)
    return series_mul(even, series_inv(odd))


def hilbert_from_betti(b: BettiTable) -> UniPoly:
    d = b.dim
    out = UniPoly()
    for i, j, count in b.entries:
        out = out + ((-1) ** i * count) * binom_poly(d - j, d)
    return out


def koszul_betti(ell: int, d: int) -> BettiTable:
    """Koszul resolution of S modulo ``ell`` variables: ``beta[i, i] = binom(ell, i)``."""
    if not 0 <= ell <= d + 1:
        raise IndexOutOfRange(f"Koszul complex on {ell} variables does not exist on P^{d}")
    return BettiTable(d, tuple((i, i, comb(ell, i)) for i in range(ell + 1)))


def chern_S_ell(ell: int, d: int) -> TruncatedSeries:
    if not 0 <= ell <= d:
        raise IndexOutOfRange(f"S_{ell} is not defined on P^{d}")
    out = TruncatedSeries.one(d)
    for i in range(1, ell + 1):
        out = series_mul(out, series_int_pow(_line_factor(i, d), (-1) ** i * comb(ell, i)))
    return out
