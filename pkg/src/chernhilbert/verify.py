"""Identity suites run by ``chernhilbert verify``.

Each suite checks exact identities for every dimension up to a bound and
reports the first counterexample it meets.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from math import comb
from typing import Callable, Iterator

from .errors import ChernHilbertError
from .hrr import char_from_class, chern_character, hilbert_from_chern, hilbert_via_pcoeff
from .ktheory import KClass, eta, eta_inv, zeta, zeta_inv
from .numerical_poly import binom_poly, combo_to_poly, twist_to_sl_combo
from .resolutions import chern_S_ell, chern_from_betti, class_from_betti, hilbert_from_betti, koszul_betti
from .series import TruncatedSeries, series_int_pow, series_mul

MAX_DIM = 12


@dataclass
class SuiteResult:
    name: str
    checks: int
    failure: str | None = None

    @property
    def passed(self) -> bool:
        return self.failure is None


def random_class(rng: random.Random, d: int, lo: int = -20, hi: int = 20) -> KClass:
    return KClass(d, tuple(rng.randint(lo, hi) for _ in range(d + 1)))


def _twisted(dim_max: int, rng) -> Iterator[tuple[bool, str]]:
    for d in range(dim_max + 1):
        for m in range(d + 1):
            rhs = TruncatedSeries.one(d)
            for ell in range(m + 1):
                rhs = series_mul(rhs, series_int_pow(chern_S_ell(ell, d), (-1) ** ell * comb(m, ell)))
            yield rhs == TruncatedSeries.from_poly([1, -m], d), f"1-{m}x on P^{d}"


def _eqpoly(dim_max: int, rng) -> Iterator[tuple[bool, str]]:
    for d in range(dim_max + 1):
        for m in range(d + 1):
            lhs = binom_poly(d - m, d)
            yield lhs == combo_to_poly(twist_to_sl_combo(m, d)), f"eqpoly m={m} d={d}"
            if d >= 1:
                rhs = binom_poly(d - m + 1, d) - binom_poly(d - m, d - 1)
                yield lhs == rhs, f"Pascal step m={m} d={d}"


def _round_trips(dim_max: int, rng, samples: int) -> Iterator[tuple[bool, str]]:
    for d in range(dim_max + 1):
        for _ in range(samples):
            a = random_class(rng, d)
            yield zeta_inv(zeta(a)) == a, f"zeta round trip {a}"
            yield eta_inv(eta(a), d) == a, f"eta round trip {a}"


def _hrr(dim_max: int, rng, samples: int) -> Iterator[tuple[bool, str]]:
    for d in range(dim_max + 1):
        for _ in range(samples):
            a = random_class(rng, d)
            cr = zeta(a)
            p = eta(a)
            yield hilbert_from_chern(cr) == p, f"HRR {a}"
            yield hilbert_via_pcoeff(cr) == p, f"coefficient formula {a}"
            yield char_from_class(a) == chern_character(cr), f"Chern character {a}"


def _koszul(dim_max: int, rng) -> Iterator[tuple[bool, str]]:
    for d in range(dim_max + 1):
        b = koszul_betti(d + 1, d)
        yield class_from_betti(b) == KClass.zero(d), f"Koszul class d={d}"
        yield chern_from_betti(b) == TruncatedSeries.one(d), f"Koszul Chern d={d}"
        yield hilbert_from_betti(b).is_zero(), f"Koszul Hilbert d={d}"


def run_suites(dim_max: int, samples: int = 40, seed: int = 0) -> list[SuiteResult]:
    if not 0 <= dim_max <= MAX_DIM:
        raise ValueError(f"dim-max must lie in 0..{MAX_DIM}")
    suites: list[tuple[str, Callable]] = [
        ("twisted congruence", lambda rng: _twisted(dim_max, rng)),
        ("binomial identities", lambda rng: _eqpoly(dim_max, rng)),
        ("isomorphism round trips", lambda rng: _round_trips(dim_max, rng, samples)),
        ("HRR consistency", lambda rng: _hrr(dim_max, rng, samples)),
        ("Koszul zero sheaf", lambda rng: _koszul(dim_max, rng)),
    ]
    results = []
    for name, suite in suites:
        rng = random.Random(seed)
        res = SuiteResult(name, 0)
        try:
            for ok, label in suite(rng):
                res.checks += 1
                if not ok:
                    res.failure = label
                    break
        except ChernHilbertError as exc:
            res.failure = f"{type(exc).__name__}: {exc}"
        results.append(res)
    return results
