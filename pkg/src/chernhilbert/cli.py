"""Command-line front end.

Exit codes: 0 success, 1 verify failure, 2 parse/validation error,
3 input outside the image of the requested map.
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction

from .errors import ChernHilbertError, NotInHilbertLattice, NotRepresentable
from .expr import format_ascending, format_descending, parse_poly_expr
from .hrr import chern_from_hilbert, hilbert_from_chern, todd_factor
from .ktheory import ChernRank, reduce_twist, zeta, zeta_inv
from .numerical_poly import UniPoly
from .resolutions import BettiTable, class_from_betti, hilbert_from_betti
from .series import TruncatedSeries
from .verify import MAX_DIM, run_suites


class UsageError(ChernHilbertError):
    pass


def _rat(q: Fraction) -> str:
    return str(Fraction(q))


def _chern_str(s: TruncatedSeries) -> str:
    return format_ascending(s.coeffs, "x")


def _hilbert_str(p: UniPoly) -> str:
    return format_descending(p.coeffs, "t")


def _emit(fields: dict, fmt: str, out) -> None:
    if fmt == "json":
        out.write(json.dumps(fields) + "\n")
        return
    width = max(len(k) for k in fields)
    for key, value in fields.items():
        if isinstance(value, list):
            value = "[" + ", ".join(str(v) for v in value) + "]"
        out.write(f"{key:<{width}}  {value}\n")


def _dim(d: int) -> int:
    if d < 0:
        raise UsageError("--dim must be non-negative")
    return d


def cmd_chern2hilbert(args) -> dict:
    d = _dim(args.dim)
    coeffs = parse_poly_expr(args.chern, "x")
    cr = ChernRank(d, TruncatedSeries.from_poly(coeffs or [0], d), args.rank)
    zeta_inv(cr)  # raises NotRepresentable outside the image of K(P^d)
    return {
        "dim": d,
        "chern": _chern_str(cr.chern),
        "rank": cr.rank,
        "hilbert": _hilbert_str(hilbert_from_chern(cr)),
    }


def cmd_hilbert2chern(args) -> dict:
    d = _dim(args.dim)
    p = UniPoly(parse_poly_expr(args.hilbert, "t"))
    cr = chern_from_hilbert(p, d)
    return {"dim": d, "hilbert": _hilbert_str(p), "chern": _chern_str(cr.chern), "rank": cr.rank}


def cmd_class_reduce(args) -> dict:
    d = _dim(args.dim)
    return {"dim": d, "twist": args.twist, "class": list(reduce_twist(args.twist, d).n)}


def cmd_betti(args) -> dict:
    d = _dim(args.dim)
    try:
        with open(args.file, encoding="utf-8") as fh:
            table = BettiTable.from_json(fh.read())
    except OSError as exc:
        raise UsageError(f"cannot read {args.file}: {exc.strerror}") from exc
    if table.dim != d:
        raise UsageError(f"table is for P^{table.dim} but --dim is {d}")
    cls = class_from_betti(table)
    cr = zeta(cls)
    return {
        "dim": d,
        "class": list(cls.n),
        "chern": _chern_str(cr.chern),
        "rank": cr.rank,
        "hilbert": _hilbert_str(hilbert_from_betti(table)),
    }


def cmd_todd(args) -> dict:
    d = _dim(args.dim)
    return {"dim": d, "todd": [_rat(c) for c in todd_factor(d).coeffs]}


def cmd_verify(args, out) -> int:
    if not 0 <= args.dim_max <= MAX_DIM:
        raise UsageError(f"--dim-max must lie in 0..{MAX_DIM}")
    start = time.perf_counter()
    results = run_suites(args.dim_max, samples=args.samples, seed=args.seed)
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        line = f"{status}  {r.name} ({r.checks} checks)"
        if not r.passed:
            line += f": {r.failure}"
        out.write(line + "\n")
    out.write(f"{sum(r.passed for r in results)}/{len(results)} suites passed "
              f"in {time.perf_counter() - start:.2f}s\n")
    return 0 if all(r.passed for r in results) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="chernhilbert",
        description="Convert between K(P^d) classes, Chern polynomials and Hilbert polynomials.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--dim", type=int, required=True, help="dimension d of P^d")
    common.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("chern2hilbert", parents=[common], help="Hilbert polynomial from (Chern, rank)")
    p.add_argument("--chern", required=True, help='Chern polynomial in x, e.g. "1-3x+2x^2"')
    p.add_argument("--rank", type=int, required=True)
    p.set_defaults(func=cmd_chern2hilbert)

    p = sub.add_parser("hilbert2chern", parents=[common], help="(Chern, rank) from a Hilbert polynomial")
    p.add_argument("--hilbert", required=True, help='Hilbert polynomial in t, e.g. "1/2 t^2 + 3/2 t + 1"')
    p.set_defaults(func=cmd_hilbert2chern)

    p = sub.add_parser("class-reduce", parents=[common], help="[O(-m)] in the basis [O], ..., [O(-d)]")
    p.add_argument("--twist", type=int, required=True, help="m in O(-m)")
    p.set_defaults(func=cmd_class_reduce)

    p = sub.add_parser("betti", parents=[common], help="invariants of a Betti table (JSON file)")
    p.add_argument("--file", required=True)
    p.set_defaults(func=cmd_betti)

    p = sub.add_parser("todd", parents=[common], help="coefficients of (x/(1-e^-x))^(d+1)")
    p.set_defaults(func=cmd_todd)

    p = sub.add_parser("verify", help="run the identity suites for every d up to --dim-max")
    p.add_argument("--dim-max", type=int, required=True)
    p.add_argument("--samples", type=int, default=40, help="random classes per dimension")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=None)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    out = sys.stdout
    try:
        if args.command == "verify":
            return cmd_verify(args, out)
        _emit(args.func(args), args.format, out)
        return 0
    except (NotRepresentable, NotInHilbertLattice) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except ChernHilbertError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
