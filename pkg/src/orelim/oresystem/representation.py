"""The Ore system as a matrix of operators L_x R_y acting on coefficient vectors.

Row n of M applied to (p_0, p_1, ...) gives E^n p(H + n) - p(H - n) E^n.
M' does the same for the Pochhammer coefficients a_j of p = sum a_j (t)_j.
"""

from __future__ import annotations

from math import comb, factorial

from ..exactpoly import Poly, basis_change, pochhammer, stirling2
from ..report import FAIL, PASS, CheckReport, Witness, timed
from .algebra import EndOp, L, OreElem, R, act_equal
from .equations import system_residual
from .orepoly import OrePoly

BASES = ("monomial", "pochhammer")


def _sign(k: int) -> int:
    return -1 if k % 2 else 1


def _LE(c, n) -> EndOp:
    return L(OreElem.E(c, n))


def _RE(c, n) -> EndOp:
    return R(OreElem.E(c, n))


def _RH_poly(c, q: Poly) -> EndOp:
    return R(OreElem.h_poly(c, q))


def m_entry(c, i: int, j: int) -> EndOp:
    """L_E^i R_{H+i}^(j-1) - R_E^i R_{H-i}^(j-1)."""
    plus = _RH_poly(c, Poly((i, 1)) ** (j - 1))
    minus = _RH_poly(c, Poly((-i, 1)) ** (j - 1))
    return _LE(c, i) * plus - _RE(c, i) * minus


def m0_entry(c, i: int, j: int) -> EndOp:
    """i^(j-1) (L_E^i - (-1)^(j-1) R_E^i)."""
    return (_LE(c, i) - _RE(c, i) * _sign(j - 1)) * i ** (j - 1)


def p_rh_t_entry(c, i: int, j: int) -> EndOp:
    """Entry of P_{R_H}^t: C(j-1, i-1) R_H^(j-i)."""
    if j < i:
        return EndOp(c)
    return _RH_poly(c, Poly.monomial(j - i)) * comb(j - 1, i - 1)


def mp_diff_entry(c, i: int, j: int) -> EndOp:
    """Entry of M'_1 - M'_2: L_E^i C(i+j-2, j-1) - R_E^i (-1)^(j-1) C(i, j-1)."""
    return _LE(c, i) * comb(i + j - 2, j - 1) - _RE(c, i) * (_sign(j - 1) * comb(i, j - 1))


def pp_rh_t_entry(c, i: int, j: int) -> EndOp:
    """Entry of P'_{R_H}^t: C(j-1, i-1) R_{(H)_(j-i)}."""
    if j < i:
        return EndOp(c)
    return _RH_poly(c, pochhammer(j - i)) * comb(j - 1, i - 1)


def mp_entry(c, i: int, j: int) -> EndOp:
    """Entry of M' = (M'_1 - M'_2) F (P'_{R_H})^t."""
    acc = EndOp(c)
    for k in range(1, j + 1):
        acc = acc + mp_diff_entry(c, i, k) * pp_rh_t_entry(c, k, j) * factorial(k - 1)
    return acc


def _matmul(a, b, c):
    n = len(a)
    return [[sum((a[i][k] * b[k][j] for k in range(n)), EndOp(c)) for j in range(n)]
            for i in range(n)]


def _dsd_scalar(n: int):
    """n-minor of D_{-1} s(S)^t D_{-1} as rationals (1-based S(j-1, i-1) off the corner)."""
    out = [[0] * n for _ in range(n)]
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i == j == 1:
                v = 1
            elif i == 1 or j == 1:
                v = 0
            else:
                v = stirling2(j - 1, i - 1)
            out[i - 1][j - 1] = v * _sign(i) * _sign(j)
    return out


def _pochhammer_coeffs(p: OrePoly):
    """a_j with p = sum a_j (t)_j, applying the scalar basis change to each E^a H^b slot."""
    n = len(p.coeffs)
    cols = []
    for m in range(n):
        e = [0] * n
        e[m] = 1
        cols.append(basis_change(e, "monomial_to_pochhammer"))
    out = []
    for k in range(n):
        acc = OreElem.zero(p.c)
        for m in range(k, n):
            if cols[m][k]:
                acc = acc + p.coeffs[m] * cols[m][k]
        out.append(acc)
    return out


def rep_row_residual(p: OrePoly, n: int, basis: str = "monomial") -> OreElem:
    """Row n of M (or M') applied to p's coefficients, minus system_residual(p, n)."""
    c = p.c
    if basis == "monomial":
        vec, entry = list(p.coeffs), m_entry
    elif basis == "pochhammer":
        vec, entry = _pochhammer_coeffs(p), mp_entry
    else:
        raise ValueError(f"unknown basis {basis!r}")
    acc = OreElem.zero(c)
    for j, v in enumerate(vec, start=1):
        if v:
            acc = acc + entry(c, n, j)(v)
    return acc - system_residual(p, n)


def substitute(op: EndOp) -> Poly:
    """Image of an H-free operator under L_E -> x, R_E -> 1."""
    acc = Poly()
    for ((a1, b1), (a2, b2)), v in op.pairs.items():
        if b1 or b2:
            raise ValueError("operator involves H")
        acc = acc + Poly.monomial(a1, v)
    return acc


def rep_factorization_check(n: int, d: int, basis: str = "monomial", c=1) -> CheckReport:
    """Compare n-minors of M with M_0 P_{R_H}^t (monomial) or M' D s(S)^t D (pochhammer).

    Entries are compared by their action on E^a H^b for a, b <= d.
    """
    params = {"n": n, "d": d, "basis": basis, "c": str(c)}
    rng = range(1, n + 1)
    witness = None
    with timed() as elapsed:
        lhs = [[m_entry(c, i, j) for j in rng] for i in rng]
        if basis == "monomial":
            a = [[m0_entry(c, i, j) for j in rng] for i in rng]
            b = [[p_rh_t_entry(c, i, j) for j in rng] for i in rng]
        elif basis == "pochhammer":
            a = [[mp_entry(c, i, j) for j in rng] for i in rng]
            b = [[EndOp.scalar(c, v) for v in row] for row in _dsd_scalar(n)]
        else:
            raise ValueError(f"unknown basis {basis!r}")
        rhs = _matmul(a, b, c)
        for i in rng:
            for j in rng:
                x, y = lhs[i - 1][j - 1], rhs[i - 1][j - 1]
                m = act_equal(x, y, d)
                if m is not None:
                    witness = Witness(i, j, str(x(m)), str(y(m)))
                    break
            if witness:
                break
    status = FAIL if witness else PASS
    return CheckReport("rep_factorization", params, status, witness, elapsed[0])
