"""The Ore algebra A = k<E, H : HE = E(H + c)> and operators on it.

Elements are kept in the normal form sum_a E^a q_a(H).  The one rewriting
rule needed is q(H) E^b = E^b q(H + bc).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable

from ..exactpoly import ONE, Poly, as_fraction, poly_shift


class AlgebraMismatch(ValueError):
    """Operands live in Ore algebras with different structure constants."""


class OreElem:
    __slots__ = ("c", "terms", "_key")

    def __init__(self, c, terms=None):
        self.c = as_fraction(c)
        clean = {}
        for a, q in (terms or {}).items():
            if not isinstance(q, Poly):
                q = Poly.const(q)
            if q:
                if a < 0:
                    raise ValueError("E exponents are nonnegative")
                clean[a] = q
        self.terms = clean
        self._key = None

    # -- constructors -------------------------------------------------
    @classmethod
    def zero(cls, c) -> OreElem:
        return cls(c)

    @classmethod
    def scalar(cls, c, value) -> OreElem:
        return cls(c, {0: Poly.const(value)})

    @classmethod
    def one(cls, c) -> OreElem:
        return cls(c, {0: ONE})

    @classmethod
    def E(cls, c, power: int = 1) -> OreElem:
        return cls(c, {power: ONE})

    @classmethod
    def H(cls, c, power: int = 1) -> OreElem:
        return cls(c, {0: Poly.monomial(power)})

    @classmethod
    def monomial(cls, c, a: int, b: int, coef=1) -> OreElem:
        """coef * E^a H^b."""
        return cls(c, {a: Poly.monomial(b, coef)})

    @classmethod
    def h_poly(cls, c, q: Poly) -> OreElem:
        return cls(c, {0: q})

    # -- queries ------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def key(self):
        if self._key is None:
            self._key = (self.c, tuple(sorted((a, q.coeffs) for a, q in self.terms.items())))
        return self._key

    def __eq__(self, other):
        if not isinstance(other, OreElem):
            return NotImplemented
        return self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def monomials(self) -> Iterable[tuple[int, int, Fraction]]:
        """(a, b, coef) for each E^a H^b term."""
        for a in sorted(self.terms):
            for b, q in enumerate(self.terms[a].coeffs):
                if q:
                    yield a, b, q

    def max_e_degree(self) -> int:
        return max(self.terms, default=-1)

    # -- arithmetic ---------------------------------------------------
    def _check(self, other: OreElem):
        if self.c != other.c:
            raise AlgebraMismatch(f"structure constants differ: {self.c} vs {other.c}")

    def __add__(self, other):
        if not isinstance(other, OreElem):
            return NotImplemented
        self._check(other)
        out = dict(self.terms)
        for a, q in other.terms.items():
            out[a] = out[a] + q if a in out else q
        return OreElem(self.c, out)

    def __neg__(self):
        return OreElem(self.c, {a: -q for a, q in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, OreElem):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return OreElem(self.c)
            return OreElem(self.c, {a: q * other for a, q in self.terms.items()})
        if not isinstance(other, OreElem):
            return NotImplemented
        return ore_mul(self, other)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def __pow__(self, k: int):
        out = OreElem.one(self.c)
        for _ in range(k):
            out = out * self
        return out

    def to_string(self) -> str:
        return format_ore(self)

    def __str__(self):
        return format_ore(self)

    def __repr__(self):
        return f"OreElem(c={self.c}, {format_ore(self)!r})"


def ore_mul(x: OreElem, y: OreElem) -> OreElem:
    """(E^a q(H)) (E^b r(H)) = E^(a+b) q(H + bc) r(H)."""
    x._check(y)
    c = x.c
    out: dict[int, Poly] = {}
    for a, q in x.terms.items():
        for b, r in y.terms.items():
            term = poly_shift(q, b * c) * r
            out[a + b] = out[a + b] + term if a + b in out else term
    return OreElem(c, out)


def ad_E(m: OreElem, power: int = 1) -> OreElem:
    """(L_E - R_E)^power applied to m."""
    e = OreElem.E(m.c)
    for _ in range(power):
        if not m:
            break
        m = e * m - m * e
    return m


def format_ore(m: OreElem) -> str:
    """Terms ``q E^a H^b`` with a ascending, b descending; zero prints ``0``."""
    pieces = []
    for a in sorted(m.terms):
        q = m.terms[a]
        for b in range(q.degree, -1, -1):
            coef = q.coeffs[b]
            if not coef:
                continue
            mono = " ".join(s for s in (f"E^{a}" if a else "", f"H^{b}" if b else "") if s)
            mag = abs(coef)
            mag_s = f"{mag.numerator}" if mag.denominator == 1 else f"{mag.numerator}/{mag.denominator}"
            if mono:
                body = mono if mag == 1 else f"{mag_s} {mono}"
            else:
                body = mag_s
            pieces.append(("-" if coef < 0 else "+", body))
    if not pieces:
        return "0"
    sign, body = pieces[0]
    out = ("-" if sign == "-" else "") + body
    for sign, body in pieces[1:]:
        out += f" {sign} {body}"
    return out


class EndOp:
    """Element of A (x) A^op acting on A by m -> sum coef * x m y.

    Keys are pairs of monomials ((a1, b1), (a2, b2)) standing for
    L_{E^a1 H^b1} R_{E^a2 H^b2}.
    """

    __slots__ = ("c", "pairs")

    def __init__(self, c, pairs=None):
        self.c = as_fraction(c)
        self.pairs = {k: as_fraction(v) for k, v in (pairs or {}).items() if v}

    @classmethod
    def identity(cls, c) -> EndOp:
        return cls(c, {((0, 0), (0, 0)): 1})

    @classmethod
    def left(cls, m: OreElem) -> EndOp:
        return cls(m.c, {((a, b), (0, 0)): q for a, b, q in m.monomials()})

    @classmethod
    def right(cls, m: OreElem) -> EndOp:
        return cls(m.c, {((0, 0), (a, b)): q for a, b, q in m.monomials()})

    @classmethod
    def scalar(cls, c, value) -> EndOp:
        return cls(c, {((0, 0), (0, 0)): value})

    def is_zero(self) -> bool:
        return not self.pairs

    def __add__(self, other: EndOp) -> EndOp:
        out = dict(self.pairs)
        for k, v in other.pairs.items():
            out[k] = out.get(k, 0) + v
        return EndOp(self.c, out)

    def __neg__(self):
        return EndOp(self.c, {k: -v for k, v in self.pairs.items()})

    def __sub__(self, other: EndOp) -> EndOp:
        return self + (-other)

    def __mul__(self, other):
        """Composition (self o other); scalars scale."""
        if isinstance(other, (int, Fraction)):
            return EndOp(self.c, {k: v * other for k, v in self.pairs.items()})
        if not isinstance(other, EndOp):
            return NotImplemented
        if other.c != self.c:
            raise AlgebraMismatch("operators over different algebras")
        c = self.c
        out: dict = {}
        for ((a1, b1), (a2, b2)), v in self.pairs.items():
            for ((u1, w1), (u2, w2)), w in other.pairs.items():
                # L_x R_y o L_u R_v = L_{xu} R_{vy}
                xu = OreElem.monomial(c, a1, b1) * OreElem.monomial(c, u1, w1)
                vy = OreElem.monomial(c, u2, w2) * OreElem.monomial(c, a2, b2)
                for la, lb, lq in xu.monomials():
                    for ra, rb, rq in vy.monomials():
                        key = ((la, lb), (ra, rb))
                        out[key] = out.get(key, 0) + v * w * lq * rq
        return EndOp(c, out)

    __rmul__ = lambda self, other: self * other if isinstance(other, (int, Fraction)) else NotImplemented

    def __call__(self, m: OreElem) -> OreElem:
        acc = OreElem(self.c)
        for ((a1, b1), (a2, b2)), v in self.pairs.items():
            acc = acc + OreElem.monomial(self.c, a1, b1, v) * m * OreElem.monomial(self.c, a2, b2)
        return acc

    def __repr__(self):
        return f"EndOp(c={self.c}, {len(self.pairs)} pairs)"


def L(m: OreElem) -> EndOp:
    return EndOp.left(m)


def R(m: OreElem) -> EndOp:
    return EndOp.right(m)


def monomial_basis(c, d: int):
    return [OreElem.monomial(c, a, b) for a in range(d + 1) for b in range(d + 1)]


def act_equal(x: EndOp, y: EndOp, d: int):
    """Compare two operators by their action on E^a H^b, a, b <= d.

    Returns None when they agree, else the first basis element where they differ.
    """
    for m in monomial_basis(x.c, d):
        if x(m) != y(m):
            return m
    return None
