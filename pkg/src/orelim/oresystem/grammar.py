"""Text form of t-polynomials over the Ore algebra.

Coefficients of t are separated by ``;`` (lowest power first).  Each
coefficient is a sum of terms ``q E^a H^b`` where q is an optional rational,
``E``/``H`` without an exponent mean power 1, and whitespace is ignored.
Example: ``1; 2 E^1 H^0 + -1/2 E^0 H^2``.
"""

from __future__ import annotations

import re
from fractions import Fraction

from ..exactpoly import as_fraction
from .algebra import OreElem, format_ore
from .orepoly import OrePoly


class OreParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


_TOKEN = re.compile(r"\s*(?:(?P<num>\d+(?:/\d+)?)|(?P<var>[EH])|(?P<op>[-+^;*]))")


def _tokens(text: str):
    pos = 0
    out = []
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            start = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise OreParseError(f"unexpected character {text[start]!r}", start)
        kind = m.lastgroup
        out.append((kind, m.group(kind), m.start(kind)))
        pos = m.end()
    out.append(("end", "", len(text)))
    return out


class _Parser:
    def __init__(self, text: str, c):
        self.c = as_fraction(c)
        self.toks = _tokens(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self):
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def fail(self, what):
        kind, val, pos = self.peek()
        got = "end of input" if kind == "end" else repr(val)
        raise OreParseError(f"expected {what}, got {got}", pos)

    def number(self):
        kind, val, _ = self.peek()
        if kind != "num":
            self.fail("a number")
        self.take()
        return Fraction(val)

    def term(self) -> OreElem:
        sign = 1
        while self.peek()[1] in ("+", "-"):
            if self.take()[1] == "-":
                sign = -sign
        coef = Fraction(1)
        seen = False
        if self.peek()[0] == "num":
            coef = self.number()
            seen = True
            if self.peek()[1] == "*":
                self.take()
        powers = {"E": 0, "H": 0}
        while self.peek()[0] == "var":
            _, var, pos = self.take()
            exp = 1
            if self.peek()[1] == "^":
                self.take()
                exp = self.number()
                if exp.denominator != 1:
                    raise OreParseError("exponents must be integers", self.toks[self.i - 1][2])
                exp = int(exp)
            powers[var] += exp
            seen = True
            if self.peek()[1] == "*":
                self.take()
        if not seen:
            self.fail("a term")
        return OreElem.monomial(self.c, powers["E"], powers["H"], sign * coef)

    def coefficient(self) -> OreElem:
        acc = self.term()
        while self.peek()[1] in ("+", "-"):
            acc = acc + self.term()
        return acc

    def parse(self) -> OrePoly:
        coeffs = [self.coefficient()]
        while self.peek()[1] == ";":
            self.take()
            coeffs.append(self.coefficient())
        if self.peek()[0] != "end":
            self.fail("'+', '-', ';' or end of input")
        return OrePoly(self.c, coeffs)


def parse_orepoly(text: str, c) -> OrePoly:
    if not text.strip():
        raise OreParseError("empty polynomial", 0)
    return _Parser(text, c).parse()


def parse_ore(text: str, c) -> OreElem:
    p = parse_orepoly(text, c)
    if p.degree > 0:
        raise OreParseError("expected a single coefficient", text.index(";"))
    return p.coeff(0)


def format_orepoly(p: OrePoly) -> str:
    if not p.coeffs:
        return "0"
    return "; ".join(format_ore(m) for m in p.coeffs)
