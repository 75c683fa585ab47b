"""Jacobi polynomials with rational parameters and their identities.

``jacobi_P(n, a, b)`` is the classical polynomial in x built from the finite
defining sum, so it is total in the parameters (negative integers included).
``jacobi_p(n, a, b)`` is the transformed family

    p_n(x) = (x - 1)^n P_n((x + 1)/(x - 1)),

expanded directly as (1/n!) sum_k C(n,k) prod_{m<=k}(n+a+b+m)
prod_{k<m<=n}(a+m) (x-1)^(n-k), which never divides by a parameter.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from .exactpoly import ONE, ZERO, Poly, RatFunc, as_fraction

X = Poly.x()
X_MINUS_1 = Poly((-1, 1))
X_PLUS_1 = Poly((1, 1))


class DegenerateParameters(ValueError):
    """Parameters hit a forbidden denominator of an identity."""


@dataclass(frozen=True)
class JacobiParams:
    n: int
    alpha: Fraction
    beta: Fraction

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("Jacobi degree index must be nonnegative")
        object.__setattr__(self, "alpha", as_fraction(self.alpha))
        object.__setattr__(self, "beta", as_fraction(self.beta))


def _sum_coefficient(n: int, k: int, a: Fraction, b: Fraction) -> Fraction:
    c = Fraction(comb(n, k))
    for m in range(1, k + 1):
        c *= n + a + b + m
    for m in range(k + 1, n + 1):
        c *= a + m
    return c


@lru_cache(maxsize=4096)
def _jacobi_P(n: int, a: Fraction, b: Fraction) -> Poly:
    if n < 0:
        return ZERO
    half = Poly((Fraction(-1, 2), Fraction(1, 2)))  # (x - 1)/2
    out = ZERO
    power = ONE
    for k in range(n + 1):
        out = out + power * _sum_coefficient(n, k, a, b)
        power = power * half
    return out * Fraction(1, factorial(n))


@lru_cache(maxsize=4096)
def _jacobi_p(n: int, a: Fraction, b: Fraction) -> Poly:
    if n < 0:
        return ZERO
    out = ZERO
    for k in range(n + 1):
        out = out + X_MINUS_1 ** (n - k) * _sum_coefficient(n, k, a, b)
    return out * Fraction(1, factorial(n))


def jacobi_P(n, alpha=None, beta=None) -> Poly:
    """P_n^{alpha,beta}(x); P_{-1} is taken to be 0."""
    if isinstance(n, JacobiParams):
        n, alpha, beta = n.n, n.alpha, n.beta
    return _jacobi_P(n, as_fraction(alpha), as_fraction(beta))


def jacobi_p(n, alpha=None, beta=None) -> Poly:
    """p_n^{alpha,beta}(x) = (x-1)^n P_n^{alpha,beta}((x+1)/(x-1))."""
    if isinstance(n, JacobiParams):
        n, alpha, beta = n.n, n.alpha, n.beta
    return _jacobi_p(n, as_fraction(alpha), as_fraction(beta))


def jacobi_p_via_ratfunc(n: int, alpha, beta) -> Poly:
    """Independent route to p_n: substitute (x+1)/(x-1) into P_n as a RatFunc."""
    y = RatFunc(X_PLUS_1, X_MINUS_1)
    acc = RatFunc.coerce(0)
    for c in reversed(jacobi_P(n, alpha, beta).coeffs):
        acc = acc * y + c
    return (acc * RatFunc.coerce(X_MINUS_1 ** n)).as_poly()


# -- identity registry -------------------------------------------------
# Each builder returns (lhs, rhs) as polynomials in x.

def _symmetry(n, alpha, beta, aux):
    return jacobi_P(n, alpha, beta), jacobi_P(n, beta, alpha).reflect() * (-1) ** n


def _rec_a(n, alpha, beta, aux):
    P = lambda m, a: jacobi_P(m, a, a)
    lhs = P(n, alpha) * (n + 2 * alpha)
    rhs = P(n, alpha - 1) * (2 * (n + alpha)) + X * P(n - 1, alpha) * (n + alpha)
    return lhs, rhs


def _rec_b(n, alpha, beta, aux):
    P = lambda m, a: jacobi_P(m, a, a)
    lhs = X * P(n, alpha) * (n + 2 * alpha)
    rhs = P(n + 1, alpha - 1) * (2 * (n + 1)) + P(n - 1, alpha) * (n + alpha)
    return lhs, rhs


def _diff(n, alpha, beta, aux):
    P = lambda m, a: jacobi_P(m, a, a)
    one_minus_x = Poly((1, -1))
    lhs = one_minus_x * P(n, alpha) * (n + 2 * alpha)
    rhs = (P(n + 1, alpha - 1) * (-2 * (n + 1))
           + P(n, alpha - 1) * (2 * (n + alpha))
           - one_minus_x * P(n - 1, alpha) * (n + alpha))
    return lhs, rhs


def _xcomb(n, alpha, beta, aux):
    P = lambda m, a: jacobi_P(m, a, a)
    lhs = P(n + 1, alpha - 1) * (2 * (n + 1))
    rhs = (X * P(n, alpha - 1) * (2 * (n + alpha))
           + Poly((-1, 0, 1)) * P(n - 1, alpha) * (n + alpha))
    return lhs, rhs


def _lemma(sign):
    def build(n, alpha, beta, aux):
        if n + alpha == 0:
            raise DegenerateParameters(f"n + alpha = 0 (n={n}, alpha={alpha})")
        base = Poly((Fraction(sign, 2), Fraction(-1, 2)))  # (+-1 - x)/2
        lhs = ZERO
        for k in range(n + 1):
            a = alpha + n - k
            lhs = lhs + base ** (n - k) * jacobi_P(k, a, a)
        lhs = lhs * 2
        rhs = (jacobi_P(n, alpha, alpha) * ((n + 2 * alpha) / (n + alpha))
               + jacobi_P(n - 1, alpha, alpha) * sign)
        return lhs, rhs
    return build


def _u0_bridge(n, alpha, beta, aux):
    if aux is None or aux < 1:
        raise DegenerateParameters("u0_bridge needs a row index i >= 1")
    i, j = aux, aux + n
    inner = (jacobi_p(j - i, -j, -1) * Fraction(j, i)
             + X_MINUS_1 * jacobi_p(j - i - 1, -j + 1, -1) * Fraction(j - 1, i))
    lhs = X_MINUS_1 * inner
    rhs = X * jacobi_p(j - i, -j, 0) - jacobi_p(j - i, -j + 2, -2)
    return lhs, rhs


IDENTITIES = {
    "symmetry": _symmetry,
    "rec_a": _rec_a,
    "rec_b": _rec_b,
    "diff": _diff,
    "xcomb": _xcomb,
    "lemma_plus": _lemma(1),
    "lemma_minus": _lemma(-1),
    "u0_bridge": _u0_bridge,
}


def identity_sides(name: str, n: int, alpha, beta=None, aux=None):
    try:
        build = IDENTITIES[name]
    except KeyError:
        raise ValueError(f"unknown identity {name!r}") from None
    alpha = as_fraction(alpha)
    beta = alpha if beta is None else as_fraction(beta)
    return build(n, alpha, beta, aux)


def identity_residual(name: str, n: int, alpha, aux=None, beta=None) -> Poly:
    """LHS - RHS of a registered identity; zero certifies it."""
    lhs, rhs = identity_sides(name, n, alpha, beta, aux)
    return lhs - rhs
