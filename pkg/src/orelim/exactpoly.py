"""Exact univariate polynomials and rational functions over the rationals.

Coefficients are :class:`fractions.Fraction`; a :class:`Poly` is an immutable
tuple of them, lowest degree first.  The same type serves for k[t], k[x] and
polynomials in H.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial


def as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, str):
        return Fraction(value.strip())
    return Fraction(value)


def format_rational(q: Fraction) -> str:
    q = as_fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


class InvalidStep(ValueError):
    """Raised for a discrete derivative with step zero."""


class Poly:
    __slots__ = ("coeffs", "_hash")

    def __init__(self, coeffs=()):
        cs = [as_fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)
        self._hash = None

    # -- constructors -------------------------------------------------
    @classmethod
    def const(cls, c) -> Poly:
        return cls((c,))

    @classmethod
    def monomial(cls, k: int, c=1) -> Poly:
        return cls([0] * k + [c])

    @classmethod
    def x(cls) -> Poly:
        return cls((0, 1))

    @classmethod
    def _raw(cls, coeffs: tuple) -> Poly:
        # coeffs already Fractions with nonzero leading term
        p = cls.__new__(cls)
        p.coeffs = coeffs
        p._hash = None
        return p

    # -- basic queries ------------------------------------------------
    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_const(self) -> bool:
        return len(self.coeffs) <= 1

    def lc(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def coeff(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == Poly.const(other).coeffs
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.coeffs)
        return self._hash

    # -- arithmetic ---------------------------------------------------
    @staticmethod
    def _coerce(other):
        if isinstance(other, Poly):
            return other
        if isinstance(other, (int, Fraction)):
            return Poly.const(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(out)

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return Poly()
            return Poly._raw(tuple(c * other for c in self.coeffs))
        if not isinstance(other, Poly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
        return Poly._raw(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power of a polynomial")
        result = Poly.const(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def scale(self, c) -> Poly:
        return self * as_fraction(c)

    def __divmod__(self, other: Poly):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        db = other.degree
        lc = other.lc()
        if len(rem) - 1 < db:
            return Poly(), self
        quo = [Fraction(0)] * (len(rem) - db)
        for k in range(len(rem) - 1, db - 1, -1):
            c = rem[k]
            if c:
                c = c / lc
                quo[k - db] = c
                for i, cb in enumerate(other.coeffs):
                    rem[k - db + i] -= c * cb
        return Poly(quo), Poly(rem[:db])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def monic(self) -> Poly:
        if self.is_zero():
            return self
        lc = self.lc()
        if lc == 1:
            return self
        return Poly._raw(tuple(c / lc for c in self.coeffs))

    # -- evaluation / substitution ------------------------------------
    def __call__(self, value):
        """Horner evaluation at a scalar or composition with a Poly."""
        if isinstance(value, Poly):
            acc = Poly()
            for c in reversed(self.coeffs):
                acc = acc * value + c
            return acc
        value = as_fraction(value)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    def reflect(self) -> Poly:
        """p(-x)."""
        return Poly([c if k % 2 == 0 else -c for k, c in enumerate(self.coeffs)])

    # -- text ---------------------------------------------------------
    def to_string(self, var: str = "x") -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            sign = "-" if c < 0 else "+"
            a = -c if c < 0 else c
            if k == 0:
                body = format_rational(a)
            else:
                mono = var if k == 1 else f"{var}^{k}"
                body = mono if a == 1 else f"{format_rational(a)}*{mono}"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __str__(self):
        return self.to_string()

    def __repr__(self):
        return f"Poly({self.to_string()!r})"


_TERM_RE = re.compile(
    r"^(?P<coef>\d+(?:/\d+)?)?(?:\*?(?P<var>[A-Za-z]\w*)(?:\^(?P<exp>\d+))?)?$"
)


def parse_poly(text: str, var: str = "x") -> Poly:
    """Parse the canonical string form (and mild variations of it)."""
    s = text.replace(" ", "")
    if not s:
        raise ValueError("empty polynomial string")
    if s == "0":
        return Poly()
    if s[0] not in "+-":
        s = "+" + s
    tokens = re.findall(r"[+-][^+-]+", s)
    if "".join(tokens) != s:
        raise ValueError(f"cannot parse polynomial {text!r}")
    coeffs: dict[int, Fraction] = {}
    for tok in tokens:
        sign = -1 if tok[0] == "-" else 1
        m = _TERM_RE.match(tok[1:])
        if not m or (m.group("coef") is None and m.group("var") is None):
            raise ValueError(f"bad term {tok!r} in {text!r}")
        if m.group("var") is not None and m.group("var") != var:
            raise ValueError(f"unexpected variable {m.group('var')!r} in {text!r}")
        c = Fraction(m.group("coef")) if m.group("coef") else Fraction(1)
        if m.group("var") is None:
            k = 0
        else:
            k = int(m.group("exp")) if m.group("exp") else 1
        coeffs[k] = coeffs.get(k, Fraction(0)) + sign * c
    top = max(coeffs)
    return Poly([coeffs.get(k, 0) for k in range(top + 1)])


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd; gcd(0, 0) = 0."""
    while b:
        a, b = b, a % b
    return a.monic()


ONE = Poly.const(1)
ZERO = Poly()
X = Poly.x()


class RatFunc:
    """Reduced quotient numer/denom with monic denominator."""

    __slots__ = ("numer", "denom")

    def __init__(self, numer, denom=None, *, _reduced=False):
        if not isinstance(numer, Poly):
            numer = Poly.const(numer)
        if denom is None:
            denom = ONE
        elif not isinstance(denom, Poly):
            denom = Poly.const(denom)
        if denom.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if not _reduced:
            numer, denom = _reduce(numer, denom)
        self.numer = numer
        self.denom = denom

    @classmethod
    def coerce(cls, value) -> RatFunc:
        if isinstance(value, RatFunc):
            return value
        if isinstance(value, Poly):
            return cls(value, ONE, _reduced=True)
        return cls(Poly.const(value), ONE, _reduced=True)

    def is_poly(self) -> bool:
        return self.denom.degree == 0

    def as_poly(self) -> Poly:
        if not self.is_poly():
            raise ValueError(f"{self} is not a polynomial")
        return self.numer

    def is_zero(self) -> bool:
        return self.numer.is_zero()

    def __bool__(self):
        return not self.numer.is_zero()

    def __eq__(self, other):
        if not isinstance(other, RatFunc):
            if isinstance(other, (Poly, int, Fraction)):
                other = RatFunc.coerce(other)
            else:
                return NotImplemented
        return self.numer == other.numer and self.denom == other.denom

    def __hash__(self):
        return hash((self.numer, self.denom))

    def __add__(self, other):
        other = _rf(other)
        if other is None:
            return NotImplemented
        if self.denom == other.denom:
            if self.denom.degree == 0:
                return RatFunc(self.numer + other.numer, ONE, _reduced=True)
            return RatFunc(self.numer + other.numer, self.denom)
        return RatFunc(self.numer * other.denom + other.numer * self.denom,
                       self.denom * other.denom)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.numer, self.denom, _reduced=True)

    def __sub__(self, other):
        other = _rf(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _rf(other)
        if other is None:
            return NotImplemented
        if self.denom.degree == 0 and other.denom.degree == 0:
            return RatFunc(self.numer * other.numer, ONE, _reduced=True)
        return RatFunc(self.numer * other.numer, self.denom * other.denom)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _rf(other)
        if other is None:
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        return self * RatFunc(other.denom, other.numer)

    def __rtruediv__(self, other):
        return _rf(other) / self

    def __pow__(self, k: int):
        if k >= 0:
            return RatFunc(self.numer ** k, self.denom ** k, _reduced=True)
        return RatFunc(self.denom ** -k, self.numer ** -k)

    def to_string(self, var: str = "x") -> str:
        if self.is_poly():
            return self.numer.to_string(var)
        return f"({self.numer.to_string(var)})/({self.denom.to_string(var)})"

    def __str__(self):
        return self.to_string()

    def __repr__(self):
        return f"RatFunc({self.to_string()!r})"


def _rf(value):
    if isinstance(value, RatFunc):
        return value
    if isinstance(value, (Poly, int, Fraction)):
        return RatFunc.coerce(value)
    return None


def _reduce(numer: Poly, denom: Poly):
    if numer.is_zero():
        return ZERO, ONE
    if denom.degree == 0:
        c = denom.coeffs[0]
        return (numer if c == 1 else numer * (1 / c)), ONE
    # exact division is the common case for the matrices in play
    q, r = divmod(numer, denom)
    if r.is_zero():
        return q, ONE
    g = poly_gcd(numer, denom)
    if g.degree > 0:
        numer = numer // g
        denom = denom // g
    lc = denom.lc()
    if lc != 1:
        numer = numer * (1 / lc)
        denom = denom * (1 / lc)
    return numer, denom


def parse_ratfunc(text: str, var: str = "x") -> RatFunc:
    text = text.strip()
    m = re.fullmatch(r"\((.*)\)/\((.*)\)", text)
    if m:
        return RatFunc(parse_poly(m.group(1), var), parse_poly(m.group(2), var))
    return RatFunc.coerce(parse_poly(text, var))


# -- combinatorial machinery ------------------------------------------

def poly_shift(p: Poly, delta) -> Poly:
    """q(t) = p(t + delta)."""
    delta = as_fraction(delta)
    if delta == 0 or p.degree < 1:
        return p
    return p(Poly((delta, 1)))


def discrete_derivative(p: Poly, h, r: int = 1) -> Poly:
    """r-fold h-discrete derivative (p(t) - p(t-h))/h."""
    h = as_fraction(h)
    if h == 0:
        raise InvalidStep("discrete derivative needs a nonzero step")
    out = p
    for _ in range(r):
        if out.is_zero():
            break
        out = (out - poly_shift(out, -h)) * (1 / h)
    return out


@lru_cache(maxsize=None)
def pochhammer(n: int) -> Poly:
    """Rising factorial (t)_n = t(t+1)...(t+n-1)."""
    if n == 0:
        return ONE
    return pochhammer(n - 1) * Poly((n - 1, 1))


def rising(a, n: int) -> Fraction:
    """Scalar rising factorial (a)_n."""
    a = as_fraction(a)
    out = Fraction(1)
    for m in range(n):
        out *= a + m
    return out


@lru_cache(maxsize=None)
def _stirling2_row(i: int) -> tuple:
    if i == 0:
        return (1,)
    prev = _stirling2_row(i - 1)
    row = [0] * (i + 1)
    for j in range(1, i + 1):
        left = prev[j - 1] if j - 1 < len(prev) else 0
        up = prev[j] if j < len(prev) else 0
        row[j] = left + j * up
    return tuple(row)


def stirling2(i: int, j: int) -> int:
    if i < 0 or j < 0 or j > i:
        return 0
    return _stirling2_row(i)[j]


def stirling2_explicit(i: int, j: int) -> Fraction:
    """Alternating-sum formula, kept as an independent cross-check."""
    if j < 0 or i < 0:
        return Fraction(0)
    total = sum((-1) ** k * comb(j, k) * (j - k) ** i for k in range(j + 1))
    return Fraction(total, factorial(j))


def binomial(i: int, j: int) -> int:
    if i < 0 or j < 0 or j > i:
        return 0
    return comb(i, j)


def combinatorial(kind: str, i: int, j: int = 0) -> Fraction:
    if kind == "binomial":
        return Fraction(binomial(i, j))
    if kind == "stirling2":
        return Fraction(stirling2(i, j))
    if kind == "factorial":
        return Fraction(factorial(i))
    raise ValueError(f"unknown combinatorial kind {kind!r}")


def basis_change(coeffs, direction: str) -> list:
    """Convert between monomial coefficients p_j and Pochhammer coefficients a_j.

    sum p_j t^j == sum a_j (t)_j.  Uses t^n = sum_k (-1)^(n-k) S(n,k) (t)_k and
    (t)_n = sum_k c(n,k) t^k with unsigned Stirling numbers of the first kind c.
    """
    cs = [as_fraction(c) for c in coeffs]
    n = len(cs)
    out = [Fraction(0)] * n
    if direction == "monomial_to_pochhammer":
        for m, p in enumerate(cs):
            if p:
                for k in range(m + 1):
                    out[k] += (-1) ** (m - k) * stirling2(m, k) * p
    elif direction == "pochhammer_to_monomial":
        for m, a in enumerate(cs):
            if a:
                for k, c in enumerate(pochhammer(m).coeffs):
                    out[k] += c * a
    else:
        raise ValueError(f"unknown basis-change direction {direction!r}")
    return out
