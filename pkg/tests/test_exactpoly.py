from fractions import Fraction
from math import comb, factorial

import pytest
from hypothesis import given, settings, strategies as st

from orelim.exactpoly import (
    InvalidStep, Poly, RatFunc, basis_change, combinatorial, discrete_derivative,
    parse_poly, parse_ratfunc, pochhammer, poly_shift, stirling2, stirling2_explicit,
)
from orelim.infmat import DenseMinor, minor, shift, transpose, catalog

T = Poly.x()

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=6)
polys = st.lists(rationals, max_size=6).map(Poly)


def test_canonical_strings():
    assert Poly([2, 0, 2]).to_string() == "2*x^2 + 2"
    assert Poly([-1, 1]).to_string() == "x - 1"
    assert Poly([0, Fraction(-1, 2), 0, 3]).to_string() == "3*x^3 - 1/2*x"
    assert Poly().to_string() == "0"
    assert Poly([5]).to_string() == "5"
    assert Poly([0, -1]).to_string() == "-x"


@given(polys)
def test_string_round_trip(p):
    assert parse_poly(p.to_string()) == p


def test_ratfunc_normal_form():
    r = RatFunc(Poly([-2, 2]), Poly([-1, 0, 1]) * 3)   # 2(x-1) / 3(x^2-1)
    assert r.numer == Poly([Fraction(2, 3)])
    assert r.denom == Poly([1, 1])
    assert parse_ratfunc(r.to_string()) == r
    assert (r * RatFunc(Poly([1, 1]))).is_poly()


@given(polys, polys, polys)
def test_ring_laws(p, q, r):
    assert p * q == q * p
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    if p and q:
        assert (p * q).degree == p.degree + q.degree


@given(polys, polys.filter(bool))
def test_division(p, q):
    quo, rem = divmod(p, q)
    assert quo * q + rem == p
    assert rem.degree < q.degree


def test_poly_shift_examples():
    assert poly_shift(T ** 2, 0) == T ** 2
    assert poly_shift(T, 1) == Poly([1, 1])
    assert poly_shift(T ** 2, -1) == Poly([1, -2, 1])


@given(polys, rationals, rationals)
def test_poly_shift_composes(p, a, b):
    assert poly_shift(poly_shift(p, a), b) == poly_shift(p, a + b)
    assert poly_shift(p, a)(b) == p(a + b)


def test_discrete_derivative_examples():
    assert discrete_derivative(Poly([5]), 1) == Poly()
    assert discrete_derivative(T ** 3, 2, 3) == Poly([6])
    assert discrete_derivative(pochhammer(3), 1) == pochhammer(2) * 3
    with pytest.raises(InvalidStep):
        discrete_derivative(T, 0)


def _scaled_pochhammer(n, h):
    """(t/h)_n as a polynomial in t."""
    return pochhammer(n)(Poly([0, 1 / Fraction(h)]))


@pytest.mark.parametrize("h", [Fraction(1), Fraction(-1), Fraction(2), Fraction(1, 2)])
def test_derivative_of_scaled_pochhammer(h):
    # (y)_n - (y-1)_n = n (y)_(n-1); the step-h derivative also divides by h
    for n in range(13):
        for r in range(n + 1):
            got = discrete_derivative(_scaled_pochhammer(n, h), h, r)
            expect = _scaled_pochhammer(n - r, h) * (factorial(r) * comb(n, r) / h ** r)
            assert got == expect, (n, r)


def test_top_derivative_is_leading_coefficient_times_factorial():
    for m in range(8):
        p = Poly([3, -1] + [0] * m + [Fraction(2, 7)])
        d = p.degree
        assert discrete_derivative(p, Fraction(3, 2), d) == Poly([factorial(d) * Fraction(2, 7)])
        assert discrete_derivative(p, 5, d + 1) == Poly()


@given(polys, polys, rationals, rationals, st.sampled_from([1, -1, 2, Fraction(1, 2)]),
       st.integers(0, 4))
def test_derivative_linear(p, q, a, b, h, r):
    lhs = discrete_derivative(p * a + q * b, h, r)
    assert lhs == discrete_derivative(p, h, r) * a + discrete_derivative(q, h, r) * b


@given(polys, st.integers(0, 4), st.integers(0, 4))
def test_derivative_powers_compose(p, r, s):
    h = Fraction(-3, 2)
    assert discrete_derivative(discrete_derivative(p, h, s), h, r) == discrete_derivative(p, h, r + s)


def test_pochhammer():
    assert pochhammer(0) == Poly([1])
    assert pochhammer(2) == Poly([0, 1, 1])
    assert pochhammer(3) == Poly([0, 2, 3, 1])
    for n in range(8):
        expect = Poly([1])
        for k in range(n):
            expect = expect * Poly([k, 1])
        assert pochhammer(n) == expect


def test_stirling_values():
    assert stirling2(4, 2) == 7
    assert stirling2(5, 3) == 25
    assert all(stirling2(n, n) == 1 for n in range(1, 9))
    assert [stirling2(5, k) for k in range(1, 6)] == [1, 15, 25, 10, 1]
    for i in range(15):
        for j in range(15):
            assert stirling2(i, j) == stirling2_explicit(i, j)


def test_combinatorial():
    assert combinatorial("binomial", 5, 2) == 10
    assert combinatorial("binomial", 2, 5) == 0
    assert combinatorial("stirling2", 4, 2) == 7
    assert combinatorial("factorial", 5, 0) == 120


def test_basis_change_examples():
    assert basis_change([0, 1], "monomial_to_pochhammer") == [0, 1]
    assert basis_change([0, 0, 1], "monomial_to_pochhammer") == [0, -1, 1]
    v = [3, Fraction(-1, 2), 7, 2]
    assert basis_change(basis_change(v, "monomial_to_pochhammer"), "pochhammer_to_monomial") == v


@settings(max_examples=60)
@given(st.lists(rationals, max_size=20))
def test_basis_change_round_trip(v):
    there = basis_change(v, "monomial_to_pochhammer")
    assert basis_change(there, "pochhammer_to_monomial") == v
    # both representations describe the same polynomial
    p = sum((pochhammer(k) * a for k, a in enumerate(there)), Poly())
    assert p == Poly(v)


def test_basis_change_matches_stirling_matrix():
    n = 10
    d = DenseMinor([[(-1) ** i if i == j else 0 for j in range(1, n + 1)] for i in range(1, n + 1)])
    m = d @ minor(transpose(shift(catalog("S"))), n) @ d
    for col in range(n):
        e = [0] * n
        e[col] = 1
        got = basis_change(e, "monomial_to_pochhammer")
        assert [m[i + 1, col + 1] for i in range(n)] == [RatFunc.coerce(g) for g in got]
