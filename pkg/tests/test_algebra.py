from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from oracles import det_cofactor, det_leibniz
from pseudofactorials.algebra import (
    NEG_INF,
    AlgebraError,
    DimensionError,
    ModInt,
    Poly,
    bareiss_det,
    det_rational,
    format_rational,
    parse_rational,
    poly_eval,
    rational_add,
    rational_div,
    rational_mul,
)

rationals = st.builds(Fraction, st.integers(-1000, 1000), st.integers(1, 50))
small_ints = st.integers(-10, 10)


def test_rational_examples():
    assert rational_add(Fraction(1, 3), Fraction(2, 3)) == 1
    assert rational_mul(Fraction(-1, 3), -1) == Fraction(1, 3)
    assert rational_div(Fraction(2, 3), Fraction(1, 3)) == 2


def test_rational_division_by_zero():
    with pytest.raises(AlgebraError):
        rational_div(1, 0)


def test_rational_string_forms():
    assert format_rational(Fraction(6, -4)) == "-3/2"
    assert format_rational(Fraction(8, 4)) == "2"
    assert parse_rational("-3/2") == Fraction(-3, 2)


@given(rationals, rationals, rationals)
def test_field_laws(a, b, c):
    assert rational_add(a, b) == rational_add(b, a)
    assert rational_mul(a, rational_mul(b, c)) == rational_mul(rational_mul(a, b), c)
    assert rational_mul(a, rational_add(b, c)) == rational_add(rational_mul(a, b), rational_mul(a, c))


@given(rationals)
def test_normal_form(q):
    r = rational_add(q, 0)
    assert r.denominator > 0
    assert parse_rational(format_rational(r)) == r


@pytest.mark.parametrize(
    "m, det",
    [([[1]], 1), ([[1, -1], [-1, -2]], -3), ([[1, -1, -2], [-1, -2, 2], [-2, 2, 16]], -36)],
)
def test_bareiss_examples(m, det):
    assert bareiss_det(m) == det == det_cofactor(m)


@given(st.integers(1, 4).flatmap(lambda n: st.lists(st.lists(small_ints, min_size=n, max_size=n), min_size=n, max_size=n)))
def test_bareiss_matches_cofactor(m):
    assert bareiss_det(m) == det_cofactor(m) == det_leibniz(m)


def test_bareiss_pivot_swap_and_singular():
    assert bareiss_det([[0, 1], [1, 0]]) == -1
    assert bareiss_det([[0, 0], [1, 2]]) == 0
    assert bareiss_det([[1, 2], [2, 4]]) == 0


def test_det_shape_errors():
    with pytest.raises(DimensionError):
        bareiss_det([[1, 2]])
    with pytest.raises(DimensionError):
        det_rational([])


def test_bareiss_rejects_fractions():
    with pytest.raises(AlgebraError):
        bareiss_det([[Fraction(1, 2)]])


@given(st.integers(1, 4).flatmap(lambda n: st.lists(st.lists(rationals, min_size=n, max_size=n), min_size=n, max_size=n)))
def test_det_rational_matches_cofactor(m):
    assert det_rational(m) == det_cofactor(m)


@pytest.mark.parametrize(
    "coeffs, x, value",
    [([1, 1], -1, 0), ([1, 0, 2], 1, 3), ([1, 3, 6, 10], 0, 1), ([1, 3, 6, 10], Fraction(1, 2), Fraction(21, 4))],
)
def test_poly_eval(coeffs, x, value):
    assert poly_eval(Poly(coeffs), x) == value
    assert Poly(coeffs)(x) == value


def test_poly_eval_float():
    assert poly_eval(Poly([1, 3, 6, 10]), 0.5) == pytest.approx(5.25)


def test_zero_polynomial_degree():
    assert Poly().degree == NEG_INF
    assert Poly([0, 0]).degree == NEG_INF
    assert Poly([3, 0, 1, 0]).degree == 2


def test_poly_printing_and_reciprocal():
    q3 = Poly([1, 3, 6, 10])
    assert q3.reciprocal().to_str() == "10 + 6*z + 3*z^2 + z^3"
    assert Poly([24, -8, 24, 0, 1]).to_str() == "24 - 8*z + 24*z^2 + z^4"
    assert Poly([0, -1]).to_str() == "-z"
    assert Poly().to_str() == "0"
    with pytest.raises(AlgebraError):
        Poly([1, 2, 3]).reciprocal(1)


def test_poly_mod_requires_integers():
    assert Poly([-1, 7, 3]).mod(7) == Poly([6, 0, 3])
    with pytest.raises(AlgebraError):
        Poly([Fraction(1, 2)]).mod(3)


polys = st.lists(rationals, max_size=6).map(Poly)


@given(polys, polys, polys)
def test_poly_ring_laws(p, q, r):
    assert p * (q + r) == p * q + p * r
    assert (p * q) * r == p * (q * r)
    assert p - p == Poly()


@given(polys, polys, rationals)
def test_poly_eval_is_a_homomorphism(p, q, x):
    assert (p * q)(x) == p(x) * q(x)
    assert (p + q)(x) == p(x) + q(x)


def test_poly_immutable():
    p = Poly([1, 2])
    with pytest.raises(AttributeError):
        p.coeffs = ()
    assert hash(p) == hash(Poly([1, 2, 0]))


@given(st.integers(-10**6, 10**6), st.integers(-10**6, 10**6), st.integers(2, 500))
def test_modint_matches_integer_arithmetic(a, b, m):
    x, y = ModInt(a, m), ModInt(b, m)
    assert (x + y).value == (a + b) % m
    assert (x - y).value == (a - b) % m
    assert (x * y).value == (a * b) % m
    assert (-x).value == (-a) % m


@given(st.integers(1, 10**6), st.sampled_from([2, 3, 5, 7, 11, 13, 101, 997]))
def test_modint_inverse(a, p):
    if a % p == 0:
        with pytest.raises(AlgebraError):
            ModInt(a, p).inverse()
    else:
        assert (ModInt(a, p) * ModInt(a, p).inverse()).value == 1


def test_modint_errors():
    with pytest.raises(AlgebraError):
        ModInt(1, 1)
    with pytest.raises(AlgebraError):
        ModInt(1, 3) + ModInt(1, 5)
    with pytest.raises(AlgebraError):
        ModInt(2, 6).inverse()
