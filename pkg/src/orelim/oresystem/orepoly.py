"""Polynomials in a central variable t with Ore-algebra coefficients."""

from __future__ import annotations

from fractions import Fraction
from math import comb

from ..exactpoly import Poly, as_fraction
from .algebra import OreElem, ad_E


class OrePoly:
    __slots__ = ("c", "coeffs")

    def __init__(self, c, coeffs=()):
        self.c = as_fraction(c)
        cs = []
        for m in coeffs:
            if not isinstance(m, OreElem):
                m = OreElem.scalar(self.c, m)
            if m.c != self.c:
                raise ValueError("coefficient from a different Ore algebra")
            cs.append(m)
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def constant(cls, m: OreElem) -> OrePoly:
        return cls(m.c, [m])

    @classmethod
    def monomial(cls, c, a: int, b: int, d: int, coef=1) -> OrePoly:
        """coef * E^a H^b t^d."""
        return cls(c, [OreElem.zero(c)] * d + [OreElem.monomial(c, a, b, coef)])

    @classmethod
    def from_scalar_poly(cls, c, p: Poly) -> OrePoly:
        return cls(c, [OreElem.scalar(c, q) for q in p.coeffs])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def coeff(self, j: int) -> OreElem:
        return self.coeffs[j] if 0 <= j < len(self.coeffs) else OreElem.zero(self.c)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, OrePoly):
            return NotImplemented
        return self.c == other.c and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.c, self.coeffs))

    def __add__(self, other: OrePoly) -> OrePoly:
        n = max(len(self.coeffs), len(other.coeffs))
        return OrePoly(self.c, [self.coeff(j) + other.coeff(j) for j in range(n)])

    def __neg__(self):
        return OrePoly(self.c, [-m for m in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        """Scalar multiple, or right multiplication of every coefficient by an OreElem."""
        if isinstance(other, (int, Fraction)):
            return OrePoly(self.c, [m * other for m in self.coeffs])
        if isinstance(other, OreElem):
            return OrePoly(self.c, [m * other for m in self.coeffs])
        if isinstance(other, OrePoly):
            out = [OreElem.zero(self.c)] * (len(self.coeffs) + len(other.coeffs))
            for i, x in enumerate(self.coeffs):
                for j, y in enumerate(other.coeffs):
                    out[i + j] = out[i + j] + x * y
            return OrePoly(self.c, out)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * other
        if isinstance(other, OreElem):
            return OrePoly(self.c, [other * m for m in self.coeffs])
        return NotImplemented

    def map_coeffs(self, fn) -> OrePoly:
        return OrePoly(self.c, [fn(m) for m in self.coeffs])

    def ad_E(self, power: int = 1) -> OrePoly:
        return self.map_coeffs(lambda m: ad_E(m, power))

    def t_shift(self, delta) -> OrePoly:
        """p(t + delta)."""
        delta = as_fraction(delta)
        if delta == 0:
            return self
        n = len(self.coeffs)
        out = [OreElem.zero(self.c)] * n
        for j, m in enumerate(self.coeffs):
            if not m:
                continue
            for i in range(j + 1):
                out[i] = out[i] + m * (comb(j, i) * delta ** (j - i))
        return OrePoly(self.c, out)

    def difference(self, h, times: int = 1) -> OrePoly:
        """Unnormalized step-h difference p(t) - p(t - h), iterated; step 0 gives 0."""
        h = as_fraction(h)
        out = self
        for _ in range(times):
            if h == 0 or not out:
                return OrePoly(self.c)
            out = out - out.t_shift(-h)
        return out

    def discrete_derivative(self, h, times: int = 1) -> OrePoly:
        """(p(t) - p(t - h))/h, iterated; h must be nonzero."""
        h = as_fraction(h)
        if h == 0:
            from ..exactpoly import InvalidStep
            raise InvalidStep("discrete derivative needs a nonzero step")
        out = self
        for _ in range(times):
            out = (out - out.t_shift(-h)) * (1 / h)
        return out

    def evaluate(self, delta) -> OreElem:
        """p(H + delta) = sum_j p_j (H + delta)^j, powers placed on the right."""
        delta = as_fraction(delta)
        acc = OreElem.zero(self.c)
        base = Poly((delta, 1))
        power = Poly.const(1)
        for m in self.coeffs:
            if m:
                acc = acc + m * OreElem.h_poly(self.c, power)
            power = power * base
        return acc

    def subst_t_plus_H(self) -> OrePoly:
        """p(t + H) with t central: (t + H)^j = sum_i C(j, i) t^i H^(j-i)."""
        n = len(self.coeffs)
        out = [OreElem.zero(self.c)] * n
        for j, m in enumerate(self.coeffs):
            if not m:
                continue
            for i in range(j + 1):
                out[i] = out[i] + m * OreElem.H(self.c, j - i) * comb(j, i)
        return OrePoly(self.c, out)

    def __str__(self):
        from .grammar import format_orepoly
        return format_orepoly(self)

    def __repr__(self):
        return f"OrePoly(c={self.c}, {str(self)!r})"


def ore_eval(p: OrePoly, delta) -> OreElem:
    return p.evaluate(delta)


def subst_t_plus_H(p: OrePoly) -> OrePoly:
    return p.subst_t_plus_H()


def ad_E_power(p: OrePoly, r: int) -> OrePoly:
    return p.ad_E(r)
