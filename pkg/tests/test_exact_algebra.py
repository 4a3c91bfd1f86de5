from fractions import Fraction
from math import cos, pi

import mpmath
import pytest
from hypothesis import given, strategies as st

from rigidroots.errors import UsageError
from rigidroots.exact_algebra import (
    AlgebraicElement,
    SymbolicPolynomial,
    chebyshev_2cos,
    cyclotomic_polynomial,
    field,
    minimal_polynomial,
    sign,
    specialize,
    totient,
)

from oracles import minpoly_by_roots


@pytest.mark.parametrize(
    "M, coeffs",
    [(2, (0, 1)), (3, (-1, 1)), (4, (-2, 0, 1)), (5, (-1, -1, 1)), (6, (-3, 0, 1))],
)
def test_small_minimal_polynomials(M, coeffs):
    assert minimal_polynomial(M).coeffs == coeffs


@pytest.mark.parametrize("M", list(range(2, 31)))
def test_minimal_polynomial_matches_root_product(M):
    assert list(minimal_polynomial(M).coeffs) == minpoly_by_roots(M)


@pytest.mark.parametrize("M", list(range(2, 51)))
def test_degree_and_annihilation(M):
    mp_ = minimal_polynomial(M)
    assert mp_.coeffs[-1] == 1
    assert mp_.degree == totient(2 * M) // 2
    enc = mp_.interval_value(prec=160)
    assert enc.a <= 0 <= enc.b
    assert enc.delta < mpmath.mpf(2) ** -64


def test_cyclotomic_small():
    assert cyclotomic_polynomial(1) == (-1, 1)
    assert cyclotomic_polynomial(4) == (1, 0, 1)
    assert cyclotomic_polynomial(12) == (1, 0, -1, 0, 1)


@pytest.mark.parametrize("k", range(0, 12))
def test_chebyshev_values(k):
    t = 0.37
    val = sum(c * (2 * cos(t)) ** i for i, c in enumerate(chebyshev_2cos(k)))
    assert val == pytest.approx(2 * cos(k * t), abs=1e-9)


def test_generator_relations():
    x4 = AlgebraicElement.gen(4)
    assert x4 * x4 == 2
    x5 = AlgebraicElement.gen(5)
    assert x5 * x5 == x5 + 1
    assert (x5 - 2).sign() == -1
    assert sign(x5 - Fraction(8, 5)) == 1


def test_field_mismatch_rejected():
    with pytest.raises(UsageError):
        AlgebraicElement.gen(4) + AlgebraicElement.gen(5)
    with pytest.raises(UsageError):
        minimal_polynomial(1)


def test_text_format():
    x = AlgebraicElement.gen(4)
    assert (3 * x).to_text().startswith("[0, 3] ~ 4.24264068712")
    assert str(3 * x) == "3x"


def _elements(M):
    d = field(M).degree
    coeff = st.fractions(min_value=-20, max_value=20, max_denominator=7)
    return st.lists(coeff, min_size=d, max_size=d).map(
        lambda cs: AlgebraicElement(field(M), field(M).reduce(cs))
    )


@pytest.mark.parametrize("M", [3, 5, 7, 12, 15])
def test_ring_axioms(M):
    @given(_elements(M), _elements(M), _elements(M))
    def check(a, b, c):
        assert a + b == b + a
        assert a * b == b * a
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a - a == 0
        assert a * 1 == a

    check()


@pytest.mark.parametrize("M", [5, 7, 9, 11])
def test_sign_agrees_with_floats(M):
    @given(_elements(M))
    def check(a):
        approx = float(a)
        if abs(approx) > 1e-9:
            assert a.sign() == (1 if approx > 0 else -1)
        if a == 0:
            assert a.sign() == 0

    check()


def test_sign_of_tiny_difference():
    # 2cos(pi/7) is within 1e-3 of 1.80194; only the interval loop can separate them.
    x = AlgebraicElement.gen(7)
    assert (x - Fraction(180194, 100000)).sign() == -1
    assert (x - Fraction(180193, 100000)).sign() == 1


def test_equality_is_faithful():
    x = AlgebraicElement.gen(7)
    lhs = x ** 3
    rhs = x * x + 2 * x - 1
    assert lhs == rhs
    assert float(lhs) == pytest.approx(float(rhs))


def test_specialize_numeric_oracle():
    p = SymbolicPolynomial((-1, 0, 2, 0, 3, 0, 1))
    assert p.to_text() == "x^6 + 3x^4 + 2x^2 - 1"
    got = specialize(p, 4)
    x = 2 * cos(pi / 4)
    assert float(got) == pytest.approx(x**6 + 3 * x**4 + 2 * x**2 - 1)
    assert got == 23


@given(st.lists(st.integers(-5, 5), max_size=6), st.lists(st.integers(-5, 5), max_size=6))
def test_specialize_is_a_ring_map(p, q):
    P, Q = SymbolicPolynomial(p), SymbolicPolynomial(q)
    for M in (3, 8):
        assert specialize(P * Q, M) == specialize(P, M) * specialize(Q, M)
        assert specialize(P + Q, M) == specialize(P, M) + specialize(Q, M)
