"""Residuals of the Ore system E^n p(H + n) = p(H - n) E^n and its rewrites.

Each ``*_residual`` returns an OreElem (or OrePoly) that vanishes exactly
when the corresponding equation holds.

Inside eq_n^k the step-(c-1) operator is the plain difference
p(t) - p(t - (c-1)); it is not divided by c - 1, which keeps it defined
(and equal to zero) at c = 1.  The step-1 operator is the usual forward
difference p(t) - p(t - 1).
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial

from ..exactpoly import Poly
from ..report import FAIL, HYPOTHESIS_NOT_MET, PASS, CheckReport, Witness, timed
from .algebra import OreElem, ad_E
from .orepoly import OrePoly


class DomainError(ValueError):
    """The polynomial is outside the stated domain of a rewrite."""


def _E(c, k: int) -> OreElem:
    return OreElem.E(c, k)


def system_residual(p: OrePoly, n: int) -> OreElem:
    """E^n p(H + n) - p(H - n) E^n."""
    c = p.c
    return _E(c, n) * p.evaluate(n) - p.evaluate(-n) * _E(c, n)


class _Derivs:
    """Memo of ad_E^r of the step-1^k, step-(c-1)^i differences of p."""

    def __init__(self, p: OrePoly, normalized: bool = False):
        self.p = p
        self.normalized = normalized
        self._d = {}
        self._ad = {}

    def diff(self, k: int, i: int) -> OrePoly:
        key = (k, i)
        if key not in self._d:
            if i > 0:
                prev = self.diff(k, i - 1)
                h = self.p.c - 1
                if self.normalized:
                    out = prev.discrete_derivative(h)
                else:
                    out = prev.difference(h)
            elif k > 0:
                out = self.diff(k - 1, 0).difference(1)
            else:
                out = self.p
            self._d[key] = out
        return self._d[key]

    def ad(self, r: int, k: int, i: int) -> OrePoly:
        key = (r, k, i)
        if key not in self._ad:
            if r == 0:
                out = self.diff(k, i)
            else:
                out = self.ad(r - 1, k, i).ad_E(1)
            self._ad[key] = out
        return self._ad[key]

    def term(self, r, k, i, delta) -> OreElem:
        return self.ad(r, k, i).evaluate(delta)


def _eq_sides(d: _Derivs, n: int, k: int):
    c = d.p.c
    lhs = OreElem.zero(c)
    for i in range(k + 1):
        ci = comb(k, i) * (-1) ** i
        for j in range(n - k + 1):
            t = d.term(n - (j + i), k, i, n - c * j - i)
            if t:
                lhs = lhs + t * _E(c, j + i) * (ci * comb(n - k, j))
    rhs = OreElem.zero(c)
    for i in range(k + 1):
        t = d.term(k - i, k, i, -n + 2 * k - i)
        if t:
            rhs = rhs + t * _E(c, n - (k - i)) * (comb(k, i) * (-1) ** i)
    return lhs, rhs


def eq_residual(p: OrePoly, n: int, k: int, *, normalized: bool = False) -> OreElem:
    """LHS - RHS of eq_n^k, for 0 <= k <= n."""
    if not 0 <= k <= n:
        raise IndexError(f"eq_n^k needs 0 <= k <= n, got n={n}, k={k}")
    lhs, rhs = _eq_sides(_Derivs(p, normalized), n, k)
    return lhs - rhs


def eq_table(p: OrePoly, n_max: int, *, normalized: bool = False) -> dict:
    """All residuals eq_n^k for 0 <= k <= n <= n_max, sharing one memo."""
    d = _Derivs(p, normalized)
    out = {}
    for n in range(n_max + 1):
        for k in range(n + 1):
            lhs, rhs = _eq_sides(d, n, k)
            out[n, k] = lhs - rhs
    return out


def recursion_residual(p: OrePoly, n: int, k: int, table=None) -> OreElem:
    """eq_n^k minus its expression through eq^(k-1) at n, n-1, n-2 (n > k > 0)."""
    if not 0 < k < n:
        raise IndexError(f"the recursion needs n > k > 0, got n={n}, k={k}")
    c = p.c
    e = _E(c, 1)

    def r(nn, kk):
        if table is not None:
            return table[nn, kk]
        return eq_residual(p, nn, kk)

    a, b, cc = r(n, k - 1), r(n - 1, k - 1), r(n - 2, k - 1)
    combo = a - b * e * 2 + cc * e * e - ad_E(b) + ad_E(cc) * e
    return r(n, k) - combo


def eq_infty_residual(p: OrePoly, n: int) -> OreElem:
    """The expanded form of eq_{n+1}^n."""
    c = p.c
    d = _Derivs(p)
    acc = OreElem.zero(c)
    for i in range(n + 1):
        w = comb(n, i) * (-1) ** i
        acc = acc + d.term(n + 1 - i, n, i, n + 1 - i) * _E(c, i) * w
        acc = acc + d.term(n - i, n, i, n + 1 - c - i) * _E(c, i + 1) * w
        acc = acc - d.term(n - i, n, i, n - 1 - i) * _E(c, i + 1) * w
    return acc


def eq_infty_c0(p: OrePoly, n: int) -> OreElem:
    """Specialisation of eq_infty_residual at c = 0, in forward differences only."""
    c = p.c
    if c != 0:
        raise DomainError("this form is only valid for c = 0")
    d = _Derivs(p)
    acc = OreElem.zero(c)
    for i in range(n + 1):
        w = comb(n, i)
        acc = acc + d.term(n + 1 - i, n + i, 0, n + 1) * _E(c, i) * w
        acc = acc + d.term(n - i, n + i, 0, n + 1) * _E(c, i + 1) * w
        acc = acc - d.term(n - i, n + i, 0, n - 1) * _E(c, i + 1) * w
    return acc


def eq_infty_c1(p: OrePoly, n: int) -> OreElem:
    """Specialisation of eq_infty_residual at c = 1."""
    c = p.c
    if c != 1:
        raise DomainError("this form is only valid for c = 1")
    d = _Derivs(p)
    return d.term(n + 1, n, 0, n + 1) + d.term(n, n + 1, 0, n) * _E(c, 1)


def top_form(p: OrePoly) -> OreElem:
    """N! ad_E^(N+1)(p_N), the value of eq_infty_residual at n = N = deg p."""
    N = p.degree
    return ad_E(p.coeff(N), N + 1) * factorial(N)


def second_form(p: OrePoly) -> OreElem:
    """Value of eq_infty_residual at n = N - 1, from the top two coefficients."""
    N = p.degree
    if N < 1:
        raise DomainError("needs degree at least 1")
    c = p.c
    top, sub = p.coeff(N), p.coeff(N - 1)
    shifted_h = OreElem.h_poly(c, Poly((Fraction(N + 1, 2), 1)))
    acc = ad_E(sub, N)
    acc = acc + ad_E(top, N) * shifted_h * N
    acc = acc + ad_E(top, N - 1) * _E(c, 1) * (N * (N + 1 - N * c))
    return acc * factorial(N - 1)


def first_N_implies_all(p: OrePoly, extra: int = 3) -> CheckReport:
    """If the system holds for n = 1..deg p, confirm it for the next ``extra`` n."""
    N = max(p.degree, 0)
    params = {"c": str(p.c), "degree": N, "extra": extra}
    with timed() as elapsed:
        bad_hyp = next((n for n in range(1, N + 1) if system_residual(p, n)), None)
        witness = None
        if bad_hyp is None:
            for n in range(N + 1, N + extra + 1):
                r = system_residual(p, n)
                if r:
                    witness = Witness(n, 0, "0", str(r))
                    break
    if bad_hyp is not None:
        return CheckReport("first_N_implies_all", params, HYPOTHESIS_NOT_MET, None,
                           elapsed[0], f"system fails at n={bad_hyp}")
    status = FAIL if witness else PASS
    return CheckReport("first_N_implies_all", params, status, witness, elapsed[0])


def degree_one_combination(p: OrePoly) -> OreElem:
    """For deg p <= 1: res_3 minus a combination of res_1 and res_2 (always zero).

    Among combinations of E r2, r2 E, E^2 r1, E r1 E and r1 E^2 the only one
    that works for every c and every H-degree is
    2 E r2 + 2 r2 E - E^2 r1 - 3 E r1 E - r1 E^2.
    """
    if p.degree > 1:
        raise DomainError("the combination is stated for t-degree at most 1")
    c = p.c
    e = _E(c, 1)
    r1, r2, r3 = (system_residual(p, n) for n in (1, 2, 3))
    combo = e * r2 * 2 + r2 * e * 2 - e * e * r1 - e * r1 * e * 3 - r1 * e * e
    return r3 - combo


def ore_identity_residual(name: str, p, n: int = 1, m: int = 0):
    """Residual of one of the three commutation identities used in the rewrites.

    id1: [E, p(t + H)] = ad_E(p)(t + H) - (p(t + H) - p(t + H - c)) E
    id2: E^n p(t + H) = sum_j C(n, j) ad_E^(n-j)(p)(t - jc + H) E^j
    id3: E^n H^m = (H - nc)^m E^n; here ``p`` is just the structure constant c
    (an OrePoly is accepted too) and the result is an OreElem.
    """
    if name == "id3":
        c = p.c if isinstance(p, (OrePoly, OreElem)) else p
        base = OreElem.H(c) - OreElem.scalar(c, n * c)
        return _E(c, n) * OreElem.H(c, m) - (base ** m) * _E(c, n)
    c = p.c
    e = _E(c, 1)
    if name == "id1":
        q = p.subst_t_plus_H()
        lhs = e * q - q * e
        shifted = p.t_shift(-c).subst_t_plus_H()
        rhs = p.ad_E().subst_t_plus_H() - (q - shifted) * e
        return lhs - rhs
    if name == "id2":
        lhs = _E(c, n) * p.subst_t_plus_H()
        rhs = OrePoly(c)
        for j in range(n + 1):
            rhs = rhs + p.ad_E(n - j).t_shift(-j * c).subst_t_plus_H() * _E(c, j) * comb(n, j)
        return lhs - rhs
    raise ValueError(f"unknown identity {name!r}")


def constant_solvable(p0: OreElem, n_max: int = 4) -> tuple[bool, bool]:
    """(ad_E(p0) == 0, system holds for n = 1..n_max) for a t-constant p."""
    p = OrePoly.constant(p0)
    return (not ad_E(p0)), all(not system_residual(p, n) for n in range(1, n_max + 1))
