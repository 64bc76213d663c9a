"""Text form of polynomials in one variable.

Grammar (whitespace is insignificant)::

    expr  := ['+'|'-'] term (('+'|'-') term)*
    term  := coeff | coeff ['*'] var ['^' uint] | var ['^' uint]
    coeff := int | int '/' uint
"""
from __future__ import annotations

import re
from fractions import Fraction
from typing import Sequence

from .errors import PolySyntaxError, WrongVariable

_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<op>[-+*/^])|(?P<var>[A-Za-z])|(?P<bad>\S))")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:  # only trailing whitespace left
            break
        kind = m.lastgroup
        start = m.start(kind)
        tokens.append((kind, m.group(kind), len(text[:start].encode("utf-8"))))
        pos = m.end()
    tokens.append(("end", "", len(text.encode("utf-8"))))
    return tokens


class _Parser:
    def __init__(self, text: str, variable: str):
        self.tokens = _tokenize(text)
        self.i = 0
        self.variable = variable

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def fail(self, what: str):
        kind, value, offset = self.peek()
        if kind == "bad":
            raise PolySyntaxError(f"unexpected character {value!r}", offset)
        found = "end of input" if kind == "end" else repr(value)
        raise PolySyntaxError(f"expected {what}, found {found}", offset)

    def var(self):
        kind, value, offset = self.take()
        if value != self.variable:
            raise WrongVariable(value, self.variable, offset)
        power = 1
        if self.peek()[1] == "^":
            self.take()
            if self.peek()[0] != "int":
                self.fail("exponent")
            power = int(self.take()[1])
        return power

    def term(self) -> tuple[Fraction, int]:
        kind, value, _ = self.peek()
        if kind == "var":
            return Fraction(1), self.var()
        if kind != "int":
            self.fail("coefficient or variable")
        coeff = Fraction(int(self.take()[1]))
        if self.peek()[1] == "/":
            self.take()
            if self.peek()[0] != "int":
                self.fail("denominator")
            den = int(self.peek()[1])
            if den == 0:
                self.fail("nonzero denominator")
            self.take()
            coeff /= den
        if self.peek()[1] == "*":
            self.take()
            if self.peek()[0] != "var":
                self.fail("variable")
            return coeff, self.var()
        if self.peek()[0] == "var":
            return coeff, self.var()
        return coeff, 0

    def expr(self) -> list[Fraction]:
        out: dict[int, Fraction] = {}
        sign = 1
        if self.peek()[1] in "+-" and self.peek()[0] == "op":
            sign = -1 if self.take()[1] == "-" else 1
        while True:
            c, k = self.term()
            out[k] = out.get(k, Fraction(0)) + sign * c
            kind, value, _ = self.peek()
            if kind == "end":
                break
            if value not in ("+", "-") or kind != "op":
                self.fail("'+', '-' or end of input")
            sign = -1 if self.take()[1] == "-" else 1
        if not out:
            return []
        coeffs = [Fraction(0)] * (max(out) + 1)
        for k, c in out.items():
            coeffs[k] += c
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        return coeffs


def parse_poly_expr(text: str, variable: str) -> list[Fraction]:
    """Parse ``text`` into a dense coefficient list indexed by power.

    Trailing zero coefficients are dropped, so ``"0"`` parses to ``[]``.
    """
    if variable not in ("x", "t"):
        raise ValueError("variable must be 'x' or 't'")
    return _Parser(text, variable).expr()


def _term(c: Fraction, k: int, var: str) -> str:
    if k == 0:
        return str(c)
    mono = var if k == 1 else f"{var}^{k}"
    if c == 1:
        return mono
    if c == -1:
        return "-" + mono
    return f"{c}*{mono}"


def _join(terms: list[tuple[Fraction, int]], var: str, sep: str) -> str:
    if not terms:
        return "0"
    c0, k0 = terms[0]
    parts = [_term(c0, k0, var)]
    for c, k in terms[1:]:
        parts.append(f"{sep}-{sep}" if c < 0 else f"{sep}+{sep}")
        parts.append(_term(abs(c), k, var))
    return "".join(parts)


def format_descending(coeffs: Sequence[Fraction], var: str) -> str:
    """Highest power first, spaced: ``1/2*t^2 + 1/2*t``."""
    terms = [(Fraction(c), k) for k, c in enumerate(coeffs) if c != 0]
    return _join(terms[::-1], var, " ")


def format_ascending(coeffs: Sequence[Fraction], var: str) -> str:
    """Constant term first, compact: ``1-3*x+2*x^2``."""
    terms = [(Fraction(c), k) for k, c in enumerate(coeffs) if c != 0]
    return _join(terms, var, "")
