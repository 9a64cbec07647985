import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from oracles import binomial_series, egf, naive_mul
from pseudofactorials.algebra import Poly
from pseudofactorials.orthopoly import bigJ_series, chi_series
from pseudofactorials.pseudofact import alpha_seq, egf_f
from pseudofactorials.series import (
    QQ,
    QQz,
    RingMismatch,
    SeriesError,
    TruncSeries,
    TruncSeries2,
    Zmod,
    proportional,
    series_antiderivative,
    series_compose_transcendental,
    series_derivative,
    series_mul,
    series_reciprocal,
    series_sqrt,
    substitute_sum,
)

small_q = st.builds(Fraction, st.integers(-20, 20), st.integers(1, 20))
coeff_lists = st.lists(small_q, min_size=1, max_size=12)
unit_series = coeff_lists.map(lambda cs: TruncSeries([1] + cs))


def S(*cs, order=None):
    return TruncSeries(cs, order=order)


def test_mul_examples():
    assert series_mul(S(1, 1, order=4), S(1, -1, order=4)) == S(1, 0, -1, 0)
    f = egf_f(10)
    assert (f * f.reflect()).coeffs[:9] == tuple(Fraction(x) for x in (1, 0, -3, 0, 3, 0, -3, 0, Fraction(18, 7)))


def test_sigma_from_product():
    f = egf_f(10)
    sigma = 1 - f * f.reflect()
    assert sigma.coeffs[:9] == tuple(3 * Fraction(x) for x in (0, 0, 1, 0, -1, 0, 1, 0, Fraction(-6, 7)))


def test_ring_mismatch():
    with pytest.raises(RingMismatch):
        TruncSeries([1, 2], Zmod(5)) * TruncSeries([1, 2])
    with pytest.raises(RingMismatch):
        series_mul(TruncSeries([1], Zmod(3)), TruncSeries([1], Zmod(5)))


def test_mixed_orders_truncate_to_minimum():
    assert (S(1, 2, 3) + S(1, 1, order=2)).order == 2
    assert (S(1, 2, 3) * S(1, 1, order=5)).order == 3


def test_reciprocal_examples():
    assert series_reciprocal(S(1, 1, order=6)) == S(1, -1, 1, -1, 1, -1)
    cos = TruncSeries([Fraction((-1) ** (n // 2), math.factorial(n)) if n % 2 == 0 else 0 for n in range(7)])
    assert series_reciprocal(cos) == S(1, 0, Fraction(1, 2), 0, Fraction(5, 24), 0, Fraction(61, 720))
    assert series_reciprocal(S(1, order=5)) == S(1, order=5)


def test_reciprocal_needs_unit():
    with pytest.raises(SeriesError):
        series_reciprocal(S(0, 1))
    with pytest.raises(SeriesError):
        series_reciprocal(TruncSeries([3, 1], Zmod(6)))


@given(unit_series)
def test_reciprocal_property(a):
    one = a * series_reciprocal(a)
    assert one == TruncSeries.constant(1, a.order)


@given(coeff_lists, coeff_lists)
def test_mul_matches_naive(xs, ys):
    n = min(len(xs), len(ys))
    assert (TruncSeries(xs) * TruncSeries(ys)).coeffs == tuple(naive_mul(xs, ys, n))


def test_derivative_examples():
    assert series_derivative(S(1, -1, -1, Fraction(1, 3))) == S(-1, -2, 1)
    assert series_antiderivative(S(1, 0, Fraction(3, 2))) == S(0, 1, 0, Fraction(1, 2))
    assert series_derivative(S(5, order=4)).is_zero()


def test_derivative_orders():
    a = S(1, 2, 3, 4)
    assert series_derivative(a).order == 3
    assert series_antiderivative(a).order == 5


@given(coeff_lists)
def test_derivative_inverts_antiderivative(cs):
    a = TruncSeries([0] + cs)
    assert series_derivative(series_antiderivative(a)) == a
    assert series_antiderivative(series_derivative(a)) == a


def test_antiderivative_needs_invertible_index():
    with pytest.raises(Exception):
        series_antiderivative(TruncSeries([1, 1, 1], Zmod(2)))


def test_sqrt_examples():
    assert series_sqrt(S(1, order=5)) == S(1, order=5)
    assert series_sqrt(S(1, 2, order=8)) == TruncSeries(binomial_series(Fraction(1, 2), 2, 8))
    assert series_sqrt(S(1, 2, order=3)) == S(1, 1, Fraction(-1, 2))


def test_chi_expansion():
    chi = chi_series(7)
    assert chi.egf_values() == [1, 0, 1, -2, 1, -100, -575]


def test_sqrt_needs_unit_constant():
    with pytest.raises(SeriesError):
        series_sqrt(S(4, 1))
    with pytest.raises(ValueError):
        series_sqrt(S(1, 1), method="bisection")


@given(unit_series)
def test_sqrt_squares_back(a):
    r = series_sqrt(a)
    assert r * r == a


@given(unit_series)
def test_sqrt_methods_agree(a):
    assert series_sqrt(a, "coefficientwise").coeffs == series_sqrt(a, "newton").coeffs


def test_transcendental_examples():
    assert series_compose_transcendental("cosh", S(0, order=5)) == S(1, order=5)
    assert series_compose_transcendental("sinh", S(0, 1, order=6)) == S(0, 1, 0, Fraction(1, 6), 0, Fraction(1, 120))
    exp = series_compose_transcendental("exp", S(0, 1, order=8))
    assert exp == TruncSeries([Fraction(1, math.factorial(n)) for n in range(8)])


def test_cosh_over_polynomials():
    z = Poly.monomial(1)
    J = bigJ_series(6)
    zJ = TruncSeries([z * c for c in J.coeffs], QQz)
    ch = series_compose_transcendental("cosh", zJ)
    assert ch[0] == Poly.const(1)
    assert ch[1] == Poly()
    assert ch[2] == Poly([0, 0, Fraction(1, 2)])


def test_transcendental_errors():
    with pytest.raises(SeriesError):
        series_compose_transcendental("exp", S(1, 1))
    with pytest.raises(ValueError):
        series_compose_transcendental("tan", S(0, 1))


@given(coeff_lists)
def test_cosh_sinh_identity(cs):
    a = TruncSeries([0] + cs)
    c = series_compose_transcendental("cosh", a)
    s = series_compose_transcendental("sinh", a)
    assert c * c - s * s == TruncSeries.constant(1, a.order)


def test_equality_up_to_common_order():
    assert S(1, 2, 3) == S(1, 2, order=2)
    assert S(1, 2, 3) != S(1, 5, order=2)


def test_index_beyond_order():
    with pytest.raises(IndexError):
        S(1, 2)[2]


def test_text_and_json():
    s = S(1, Fraction(-1, 2), 0, 3)
    assert s.to_str() == "1 + -1/2*z + 3*z^3 + O(z^4)"
    assert s.to_json() == {"order": 4, "coeffs": ["1", "-1/2", "0", "3"]}


def test_modular_series():
    ring = Zmod(7)
    a = TruncSeries([1, 3, 5], ring)
    inv = series_reciprocal(a)
    assert (a * inv).coeffs == TruncSeries.constant(1, 3, ring).coeffs


def test_proportional():
    a = S(0, 2, 4, 6)
    assert proportional(a, S(0, 1, 2, 3))
    assert not proportional(a, S(0, 1, 2, 4))
    assert not proportional(a, S(1, 1, 2, 3))


def test_substitute_sum_examples():
    c = substitute_sum([1, -1], 2)
    assert (c[0, 0], c[1, 0], c[0, 1]) == (1, -1, -1)
    f = egf(alpha_seq(5))
    assert substitute_sum(f, 5)[1, 1] == -2
    const = substitute_sum([7, 0, 0, 0], 4)
    assert const.nonzero_terms() == [(0, 0, 7)]


@given(st.lists(small_q, min_size=2, max_size=10))
def test_substitute_sum_diagonal(cs):
    c = substitute_sum(cs, len(cs))
    assert c.at_y0() == TruncSeries(cs)
    assert c.at_x0() == TruncSeries(cs)


def test_bivariate_algebra():
    x = TruncSeries([0, 1], order=5)
    one = TruncSeries.constant(1, 5)
    X = TruncSeries2.outer(x, one)
    Y = TruncSeries2.outer(one, x)
    square = (X + Y) * (X + Y)
    assert square == substitute_sum([0, 0, 1, 0, 0], 5)
    assert (square - square).is_zero()
    with pytest.raises(IndexError):
        square[3, 2]
