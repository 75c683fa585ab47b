from fractions import Fraction
from itertools import product

import pytest

from orelim.exactpoly import Poly, parse_poly
from orelim.jacobi import (
    DegenerateParameters, JacobiParams, identity_residual, jacobi_P, jacobi_p, jacobi_p_via_ratfunc,
)

SAMPLE = [Fraction(v) for v in ("-4", "-7/2", "-3", "-2", "-1", "-1/2", "0", "1/2", "1", "2", "3")]
X = Poly.x()


def brute_P(n, a, b):
    """Defining sum: P_n = sum_k C(n+a, n-k) C(n+b, k) ((x-1)/2)^k ((x+1)/2)^(n-k), via falling products."""
    def gen_binom(top, k):
        out = Fraction(1)
        for m in range(k):
            out = out * (top - m) / (m + 1)
        return out
    acc = Poly()
    half_minus, half_plus = Poly([Fraction(-1, 2), Fraction(1, 2)]), Poly([Fraction(1, 2), Fraction(1, 2)])
    for k in range(n + 1):
        acc = acc + half_minus ** k * half_plus ** (n - k) * (gen_binom(n + a, n - k) * gen_binom(n + b, k))
    return acc


def test_small_values():
    assert jacobi_P(0, 5, -3) == Poly([1])
    assert jacobi_P(1, 1, 1) == Poly([0, 2])
    assert jacobi_p(0, Fraction(1, 2), 7) == Poly([1])
    assert jacobi_p(1, -2, -2) == parse_poly("-x - 1")
    assert jacobi_p(2, -3, -3) == parse_poly("x^2 + x + 1")
    assert jacobi_P(JacobiParams(1, 1, 1)) == Poly([0, 2])


def test_defining_sum_agrees():
    # the binomial form of the sum is an independent route for P_n
    for n in range(9):
        for a, b in [(-3, -3), (Fraction(1, 2), 2), (0, 0), (-1, 2), (Fraction(-7, 2), 1)]:
            assert jacobi_P(n, a, b) == brute_P(n, Fraction(a), Fraction(b)), (n, a, b)


def test_transformed_family_matches_rational_route():
    for n in range(10):
        for a in SAMPLE[::2]:
            for b in SAMPLE[1::3]:
                assert jacobi_p(n, a, b) == jacobi_p_via_ratfunc(n, a, b)


def test_degree():
    for n in range(12):
        assert jacobi_p(n, 0, 0).degree == n
        for a in SAMPLE:
            assert jacobi_p(n, a, a).degree <= n


def test_symmetry_full_sample():
    for n in range(16):
        for a, b in product(SAMPLE, SAMPLE):
            assert not identity_residual("symmetry", n, a, beta=b), (n, a, b)


@pytest.mark.parametrize("name", ["rec_a", "rec_b", "diff", "xcomb"])
def test_recurrences(name):
    for n in range(16):
        for a in SAMPLE:
            assert not identity_residual(name, n, a), (n, a)


@pytest.mark.parametrize("name", ["lemma_plus", "lemma_minus"])
def test_lemma(name):
    for n in range(13):
        for a in SAMPLE:
            if n + a == 0:
                with pytest.raises(DegenerateParameters):
                    identity_residual(name, n, a)
            else:
                assert not identity_residual(name, n, a), (n, a)


def test_lemma_small_cases():
    assert not identity_residual("lemma_plus", 0, 3)
    assert not identity_residual("lemma_plus", 1, 2)


def test_lemma_minus_from_reflection():
    # x -> -x turns the plus form into the minus form once symmetry is applied
    from orelim.jacobi import identity_sides
    for n in range(10):
        for a in (Fraction(1, 2), 2, -3 if n != 3 else 1):
            lp, rp = identity_sides("lemma_plus", n, a)
            lm, rm = identity_sides("lemma_minus", n, a)
            sign = (-1) ** n
            assert lm == lp.reflect() * sign
            assert rm == rp.reflect() * sign


def test_u0_bridge():
    assert not identity_residual("u0_bridge", 1, 0, aux=1)
    for i in range(1, 13):
        for j in range(i, 13):
            assert not identity_residual("u0_bridge", j - i, 0, aux=i), (i, j)
    with pytest.raises(DegenerateParameters):
        identity_residual("u0_bridge", 2, 0, aux=0)


def test_unknown_identity():
    with pytest.raises(ValueError):
        identity_residual("nope", 1, 0)
