"""Bounded-minor verification of the matrix identities.

Every check compares n-minors only; infinite equality is never decided.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial

from ..exactpoly import Poly, RatFunc, basis_change, rising
from ..jacobi import jacobi_p
from ..report import FAIL, PASS, CheckReport, Witness, timed
from .catalog import catalog
from .core import (
    DenseMinor, NoLU, invert_triangular_minor, left_iterated_minor, lu_minor, minor,
    product_minor, right_iterated_minor, shift, transpose,
)

X = Poly.x()
X_MINUS_1 = Poly((-1, 1))


class Mismatch(Exception):
    def __init__(self, label, i, j, expected, actual):
        super().__init__(label)
        self.witness = Witness(i, j, _s(expected), _s(actual))
        self.label = label


def _s(v):
    return v.to_string() if hasattr(v, "to_string") else str(v)


def expect_equal(label: str, expected: DenseMinor, actual: DenseMinor):
    diff = expected.first_difference(actual)
    if diff is not None:
        raise Mismatch(label, *diff)


def expect_upper(label: str, m: DenseMinor):
    for i in range(1, m.n + 1):
        for j in range(1, i):
            if m[i, j]:
                raise Mismatch(label, i, j, 0, m[i, j])


def expect_polynomial(label: str, m: DenseMinor):
    for i in range(1, m.n + 1):
        for j in range(1, m.n + 1):
            if not m[i, j].is_poly():
                raise Mismatch(label, i, j, "a polynomial", m[i, j])


def _diag(values) -> DenseMinor:
    n = len(values)
    return DenseMinor([[values[i] if i == j else 0 for j in range(n)] for i in range(n)])


def _d_minus_1(n) -> DenseMinor:
    return _diag([(-1) ** i for i in range(1, n + 1)])


def _dsd(n) -> DenseMinor:
    """D_{-1} s(S)^t D_{-1} on n-minors."""
    d = _d_minus_1(n)
    return d @ minor(transpose(shift(catalog("S"))), n) @ d


# -- individual checks -------------------------------------------------

def _vandermonde_ldu(n):
    P, F, S, V = (catalog(k) for k in ("P", "F", "S", "V"))
    fst = F @ transpose(S)
    expect_equal("V = P F S^t", minor(V, n), product_minor(P, fst, n))
    L, U = lu_minor(V, n)
    expect_equal("L(V) = P", minor(P, n), L)
    expect_equal("U(V) = F S^t", minor(fst, n), U)


def _pascal_inverse(n):
    P = minor(catalog("P"), n)
    d = _d_minus_1(n)
    expect_equal("P^-1 = D P D", d @ P @ d, invert_triangular_minor(P))


def _recurrence(name, t0):
    def run(n):
        A, T = catalog(name), catalog(t0)
        expect_equal(f"{name} = s({name}) {t0}", minor(A, n), product_minor(shift(A), T, n))
        expect_equal(f"{name} = {t0}^L", minor(A, n), left_iterated_minor(T, n))
    return run


def _right_iterated_forms(n):
    ones, P, S = catalog("ones_lower_band"), catalog("P"), catalog("S")
    expect_equal("P = ones s(P)", minor(P, n), product_minor(ones, shift(P), n))
    expect_equal("S = P s(S)", minor(S, n), product_minor(P, shift(S), n))
    expect_equal("P = ones^R", minor(P, n), right_iterated_minor(ones, n))
    expect_equal("S = P^R", minor(S, n), right_iterated_minor(P, n))


def _vandermonde_periodic(n):
    T, V, P = catalog("T0V"), catalog("V"), catalog("P")
    expect_equal("T0V^-1 = ones", minor(catalog("ones_lower_band"), n),
                 invert_triangular_minor(minor(T, n)))
    expect_upper("T0V^L V upper", left_iterated_minor(T, n) @ minor(V, n))
    L, _ = lu_minor(V, n)
    fundamental = minor(shift(P), n) @ invert_triangular_minor(L)
    expect_equal("s(L) L^-1 = T0V", minor(T, n), fundamental)


def _basis_relation(n):
    cols = []
    for k in range(n):
        e = [0] * n
        e[k] = 1
        cols.append(basis_change(e, "monomial_to_pochhammer"))
    from_op = DenseMinor([[cols[j][i] for j in range(n)] for i in range(n)])
    d = _d_minus_1(n)
    via_full = d @ minor(transpose(catalog("S")), n) @ d @ minor(transpose(catalog("P")), n)
    expect_equal("a = D s(S)^t D p", _dsd(n), from_op)
    expect_equal("D S^t D P^t = D s(S)^t D", _dsd(n), via_full)


def _m_relation(n):
    lhs = minor(catalog("M0_tilde"), n)
    right = minor(catalog("F"), n) @ _dsd(n)
    expect_equal("M0~ = (M1'~ - M2'~) F D s(S)^t D", lhs, minor(catalog("Mp_tilde"), n) @ right)


def _periodic_m0(n):
    expect_upper("T0^L M0~ upper", left_iterated_minor(catalog("T0"), n) @ minor(catalog("M0_tilde"), n))


def _thm_l0(n):
    expect_equal("T0^-1 cyclotomic", minor(catalog("T0_inv"), n),
                 invert_triangular_minor(minor(catalog("T0"), n)))
    expect_equal("L' = (T0^-1)^R", minor(catalog("Lp_tilde"), n),
                 right_iterated_minor(catalog("T0_inv"), n))
    expect_equal("L'^-1 = T0^L", minor(catalog("Lp_inv_tilde"), n),
                 left_iterated_minor(catalog("T0"), n))


def _unsigned_l(n):
    return DenseMinor([[jacobi_p(i - j, -i, -i) if j <= i else 0
                        for j in range(1, n + 1)] for i in range(1, n + 1)])


def _unsigned_linv(n):
    return DenseMinor([[jacobi_p(i - j, j, j) * Fraction(j, i) if j <= i else 0
                        for j in range(1, n + 1)] for i in range(1, n + 1)])


def _biorthogonality(n):
    ident = DenseMinor.identity(n)
    expect_equal("(j/i) p^{j,j} * p^{-i,-i} = I", ident, _unsigned_linv(n) @ _unsigned_l(n))
    expect_equal("L'^-1 L' = I", ident,
                 minor(catalog("Lp_inv_tilde"), n) @ minor(catalog("Lp_tilde"), n))


def raw_u_entry(i: int, j: int, which: int) -> RatFunc:
    """Entry of U'_1 (which=1) or U'_2 (which=2) from the coefficient double sum."""
    if j < i:
        return RatFunc.coerce(0)
    offset = i if which == 1 else i - 2
    acc = Poly()
    # C(i-1, r) vanishes for r >= i, so no negative powers of (x - 1) appear
    for r in range(0, min(j - i, i - 1) + 1):
        c = comb(i - 1, r) * rising(j - i - r + 1, i + r - 1) * rising(offset, j - i - r)
        acc = acc + X_MINUS_1 ** (i - r - 1) * c
    if which == 1:
        acc = acc * X
    return RatFunc.coerce(acc * Fraction(1, factorial(j - 1)))


def _thm_u(n):
    for which, name in ((1, "U1p_tilde"), (2, "U2p_tilde")):
        raw = DenseMinor([[raw_u_entry(i, j, which) for j in range(1, n + 1)]
                          for i in range(1, n + 1)])
        expect_equal(f"{name} closed form = coefficient sum", raw, minor(catalog(name), n))


def _lu_mprime(n):
    target = catalog("Mp_tilde")
    Lc, Uc = minor(catalog("Lp_tilde"), n), minor(catalog("Up_tilde"), n)
    expect_polynomial("U' entries polynomial", Uc)
    expect_equal("M1'~ - M2'~ = L' U'", minor(target, n), Lc @ Uc)
    L, U = lu_minor(target, n)
    expect_polynomial("generic L polynomial", L)
    expect_polynomial("generic U polynomial", U)
    expect_equal("generic L = L'", Lc, L)
    expect_equal("generic U = U'1 - U'2", Uc, U)


def _lu_m0(n):
    target = catalog("M0_tilde")
    Lc = minor(catalog("Lp_tilde"), n)
    Uc = minor(catalog("U0_tilde"), n) @ minor(catalog("F"), n) @ minor(catalog("signed_stirling_upper"), n)
    expect_polynomial("U0 F S' entries polynomial", Uc)
    expect_equal("M0~ = L0 U0 F S'", minor(target, n), Lc @ Uc)
    L, U = lu_minor(target, n)
    expect_polynomial("generic L polynomial", L)
    expect_polynomial("generic U polynomial", U)
    expect_equal("generic L = L0", Lc, L)
    expect_equal("generic U = U0 F S'", Uc, U)


def _fundamental_m0(n):
    L, _ = lu_minor(catalog("M0_tilde"), n)
    s_l = DenseMinor([[1 if i == j == 0 else (0 if i == 0 or j == 0 else L.entries[i - 1][j - 1])
                       for j in range(n)] for i in range(n)])
    expect_equal("s(L) L^-1 = T0", minor(catalog("T0"), n), s_l @ invert_triangular_minor(L))


CHECKS = {
    "vandermonde_LDU": _vandermonde_ldu,
    "pascal_inverse": _pascal_inverse,
    "pascal_recurrence": _recurrence("P", "T0P"),
    "stirling_recurrence": _recurrence("S", "T0S"),
    "right_iterated_forms": _right_iterated_forms,
    "vandermonde_periodic": _vandermonde_periodic,
    "basis_relation": _basis_relation,
    "M_relation": _m_relation,
    "periodic_M0": _periodic_m0,
    "thm_L0": _thm_l0,
    "biorthogonality": _biorthogonality,
    "thm_U": _thm_u,
    "lu_Mprime": _lu_mprime,
    "lu_M0": _lu_m0,
    "fundamental_M0": _fundamental_m0,
}


def check(name: str, n: int) -> CheckReport:
    """Run one registered matrix identity on n-minors; failures are reported."""
    if n < 1:
        raise ValueError("check depth must be at least 1")
    try:
        fn = CHECKS[name]
    except KeyError:
        raise ValueError(f"unknown check {name!r}") from None
    status, witness, detail = PASS, None, ""
    with timed() as elapsed:
        try:
            fn(n)
        except Mismatch as exc:
            status, witness, detail = FAIL, exc.witness, exc.label
        except NoLU as exc:
            status, detail = FAIL, str(exc)
            witness = Witness(exc.k, exc.k, "nonzero pivot", "0")
    return CheckReport(name, {"n": n}, status, witness, elapsed[0], detail)
