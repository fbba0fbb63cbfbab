from fractions import Fraction
from math import comb

import pytest
import sympy as sp

from oracles import euler_secant, qbinom, to_sympy
from qverify.congruence import rf_make
from qverify.polyring import ONE, ZERO, A, MPoly, Q, cyclotomic, poly_eval
from qverify.qkit import (OddIndex, SignedMonomial, central_binomial,
                          euler_number, q_binomial, q_integer, q_pochhammer,
                          rising_half_cubed_ratio)


def test_q_integer_examples():
    assert q_integer(0) == ZERO
    assert q_integer(1) == ONE
    assert q_integer(4) == 1 + Q + Q**2 + Q**3
    assert q_integer(3) == cyclotomic(3)
    with pytest.raises(ValueError):
        q_integer(-1)


def test_signed_monomial_is_canonical():
    assert SignedMonomial(-1, 2, 1).as_poly() == -(Q**2) * A
    with pytest.raises(ValueError):
        SignedMonomial(2, 1)
    with pytest.raises(ValueError):
        SignedMonomial(1, -1)


def test_q_pochhammer_examples():
    assert q_pochhammer(SignedMonomial(1, 1), 2, 2) == (1 - Q) * (1 - Q**3)
    assert q_pochhammer(SignedMonomial(-1, 1), 1, 2) == (1 + Q) * (1 + Q**2)
    assert q_pochhammer(SignedMonomial(1, 1, 1), 2, 1) == 1 - A * Q
    assert q_pochhammer(SignedMonomial(1, 1), 1, 0) == ONE
    with pytest.raises(ValueError):
        q_pochhammer(SignedMonomial(1, 1), 1, -1)


def test_q_binomial_examples():
    assert q_binomial(4, 2) == 1 + Q + 2 * Q**2 + Q**3 + Q**4
    assert q_binomial(3, 1, 2) == 1 + Q**2 + Q**4
    assert q_binomial(2, 5) == ZERO
    assert q_binomial(3, -1) == ZERO


@pytest.mark.parametrize("M", range(0, 16))
def test_q_binomial_matches_oracle(M):
    for N in range(M + 1):
        assert to_sympy(q_binomial(M, N)) == sp.expand(qbinom(M, N))


def test_q_binomial_step_is_substitution():
    for M in range(9):
        for N in range(M + 1):
            assert q_binomial(M, N, 3) == q_binomial(M, N).subs(q=Q**3)


def test_q_pascal_symmetry_and_specialisation_to_40():
    for M in range(1, 41):
        for N in range(M + 1):
            b = q_binomial(M, N)
            assert b == q_binomial(M, M - N)
            assert poly_eval(b, 1) == comb(M, N)
            if 0 < N < M:
                assert b == q_binomial(M - 1, N - 1) + q_binomial(M - 1, N).shift(N)
                assert b == q_binomial(M - 1, N - 1).shift(M - N) + q_binomial(M - 1, N)


def test_central_q_binomial_product_identity():
    for m in range(31):
        lhs = rf_make(q_binomial(2 * m, m), ONE)
        num = q_pochhammer(SignedMonomial(1, 1), 2, m) * q_pochhammer(SignedMonomial(-1, 1), 1, m) ** 2
        rhs = rf_make(num, q_pochhammer(SignedMonomial(1, 2), 2, m))
        assert lhs == rhs, m


def test_euler_number_examples():
    assert euler_number(0) == 1
    assert euler_number(2) == -1
    assert euler_number(4) == 5
    assert euler_number(6) == -61
    with pytest.raises(OddIndex):
        euler_number(3)
    with pytest.raises(ValueError):
        euler_number(-2)


def test_euler_numbers_match_sympy_and_alternate():
    for m in range(0, 101, 2):
        e = euler_number(m)
        assert e == euler_secant(m)
        assert (e > 0) == (m % 4 == 0)


def test_rising_half_ratio():
    assert rising_half_cubed_ratio(0) == 1
    assert rising_half_cubed_ratio(1) == Fraction(1, 2)
    assert rising_half_cubed_ratio(2) == Fraction(3, 8)
    for k in range(51):
        assert rising_half_cubed_ratio(k) == Fraction(comb(2 * k, k), 4**k)


def test_central_binomial():
    assert [central_binomial(k) for k in (0, 2, 5)] == [1, 6, 252]
    with pytest.raises(ValueError):
        central_binomial(-1)


def test_polynomials_are_univariate_in_q():
    for p in (q_integer(7), q_binomial(9, 4), q_pochhammer(SignedMonomial(-1, 1), 1, 5)):
        assert isinstance(p, MPoly) and p.variables() == (0,)
