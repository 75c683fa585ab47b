"""Named infinite matrices, all over k[x] (or its fraction field)."""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial

from ..exactpoly import ONE, Poly, RatFunc, as_fraction, binomial, pochhammer, stirling2
from ..jacobi import jacobi_p
from .core import DIAGONAL, GENERAL, LOWER, UPPER, InfMatrix

X = Poly.x()
X_MINUS_1 = Poly((-1, 1))


class CatalogError(KeyError):
    pass


def _sign(k: int) -> int:
    return -1 if k % 2 else 1


def _power_of_x_minus_1(k: int) -> RatFunc:
    if k >= 0:
        return RatFunc.coerce(X_MINUS_1 ** k)
    return RatFunc(ONE, X_MINUS_1 ** -k)


def _identity(i, j):
    return 1


def _vandermonde(i, j):
    return i ** (j - 1)


def _factorial(i, j):
    return factorial(i - 1)


def _pascal(i, j):
    return binomial(i - 1, j - 1)


def _stirling(i, j):
    return stirling2(i, j)


def _pascal_x(i, j):
    return X ** (i - j) * binomial(i - 1, j - 1)


def _pascal_x_prime(i, j):
    return pochhammer(i - j) * binomial(i - 1, j - 1)


def _t0_pascal(i, j):
    return 1 if i - j in (0, 1) else 0


def _t0_stirling(i, j):
    return 1 if i == j else (j if i == j + 1 else 0)


def _t0_vandermonde(i, j):
    return 1 if i == j else (-1 if i == j + 1 else 0)


def _t0(i, j):
    d = i - j
    if d == 0:
        return 1
    if d == 1:
        return Poly((-1, -1))
    if d == 2:
        return X
    return 0


def _t0_inv(i, j):
    # (x^(i-j+1) - 1)/(x - 1)
    return Poly([1] * (i - j + 1))


def _m0_tilde(i, j):
    sign = _sign(j - 1)
    return (X ** i - sign) * i ** (j - 1)


def _m1p_tilde(i, j):
    return X ** i * comb(i + j - 2, j - 1)


def _m2p_tilde(i, j):
    return binomial(i, j - 1) * _sign(j - 1)


def _lp_tilde(i, j):
    return jacobi_p(i - j, -i, -i) * _sign(i - j)


def _lp_inv_tilde(i, j):
    return jacobi_p(i - j, j, j) * (Fraction(j, i) * _sign(i - j))


def _u1p_tilde(i, j):
    return (_power_of_x_minus_1(2 * i - j - 1)
            * RatFunc.coerce(X * jacobi_p(j - i, -j, 0) * _sign(j - i)))


def _u2p_tilde(i, j):
    return (_power_of_x_minus_1(2 * i - j - 1)
            * RatFunc.coerce(jacobi_p(j - i, -j + 2, -2) * _sign(j - i)))


def _u0_tilde(i, j):
    return (_power_of_x_minus_1(2 * i - j)
            * RatFunc.coerce(jacobi_p(j - i, -j, -1) * (Fraction(j, i) * _sign(i - j))))


def _signed_stirling_upper(i, j):
    return stirling2(j, i) * _sign(j - i)


def _ones_lower(i, j):
    return 1


_TABLE = {
    "identity": (_identity, DIAGONAL),
    "V": (_vandermonde, GENERAL),
    "F": (_factorial, DIAGONAL),
    "P": (_pascal, LOWER),
    "S": (_stirling, LOWER),
    "P_x": (_pascal_x, LOWER),
    "P_x_prime": (_pascal_x_prime, LOWER),
    "T0P": (_t0_pascal, LOWER),
    "T0S": (_t0_stirling, LOWER),
    "T0V": (_t0_vandermonde, LOWER),
    "T0": (_t0, LOWER),
    "T0_inv": (_t0_inv, LOWER),
    "M0_tilde": (_m0_tilde, GENERAL),
    "M1p_tilde": (_m1p_tilde, GENERAL),
    "M2p_tilde": (_m2p_tilde, GENERAL),
    "Lp_tilde": (_lp_tilde, LOWER),
    "Lp_inv_tilde": (_lp_inv_tilde, LOWER),
    "L0_tilde": (_lp_tilde, LOWER),
    "U1p_tilde": (_u1p_tilde, UPPER),
    "U2p_tilde": (_u2p_tilde, UPPER),
    "U0_tilde": (_u0_tilde, UPPER),
    "signed_stirling_upper": (_signed_stirling_upper, UPPER),
    "ones_lower_band": (_ones_lower, LOWER),
}

# M'_2 has C(i, j-1) = 0 beyond column i + 1
_ROW_EXTENTS = {"M2p_tilde": lambda i: i + 1}

# differences used by the LU theorems
_DERIVED = {
    "Mp_tilde": ("M1p_tilde", "M2p_tilde"),
    "Up_tilde": ("U1p_tilde", "U2p_tilde"),
}

NAMES = tuple(_TABLE) + ("D_q",) + tuple(_DERIVED)


def catalog(name: str, params: dict | None = None) -> InfMatrix:
    """Build a named matrix; ``D_q`` takes ``params={'q': value}``."""
    params = params or {}
    if name == "D_q":
        if "q" not in params:
            raise CatalogError("D_q needs a parameter q")
        q = params["q"]
        if isinstance(q, str):
            q = Poly.x() if q.strip() == "x" else as_fraction(q)
        q = RatFunc.coerce(q)
        return InfMatrix(lambda i, j: q ** i, DIAGONAL, f"D_{q}")
    if name in _DERIVED:
        a, b = _DERIVED[name]
        m = catalog(a) - catalog(b)
        m.name = name
        return m
    try:
        entry, shape = _TABLE[name]
    except KeyError:
        raise CatalogError(f"unknown matrix {name!r}; known: {', '.join(NAMES)}") from None
    return InfMatrix(entry, shape, name, row_extent=_ROW_EXTENTS.get(name))
