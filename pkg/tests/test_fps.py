from fractions import Fraction
from math import comb, factorial

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from legendre_like.errors import SingularSeriesError, UnsupportedNormalizationError, UsageError
from legendre_like.fps import (
    DEFAULT_ORDER,
    TruncatedSeries,
    polynomial_series,
    series_add,
    series_coefficient,
    series_derivative,
    series_exp,
    series_inv_sqrt,
    series_mul,
    series_power,
    series_reciprocal,
)

small_rationals = st.fractions(min_value=-3, max_value=3, max_denominator=6)
orders = st.integers(min_value=0, max_value=DEFAULT_ORDER)


def _unit_series(order, tail):
    return TruncatedSeries([1, *tail], order)


def _binomial(q: Fraction, k: int) -> Fraction:
    out = Fraction(1)
    for i in range(k):
        out = out * (q - i) / (i + 1)
    return out


def test_coefficients_reduced_and_padded():
    s = TruncatedSeries([Fraction(2, 4), 3], 4)
    assert s.coeffs == (Fraction(1, 2), 3, 0, 0, 0)
    assert s.order == 4


def test_truncation_drops_high_terms():
    assert TruncatedSeries([1, 2, 3, 4], 1).coeffs == (1, 2)


def test_negative_order_rejected():
    with pytest.raises(UsageError):
        TruncatedSeries([1], -1)


def test_mul_order_mismatch():
    with pytest.raises(UsageError):
        series_mul(TruncatedSeries([1], 3), TruncatedSeries([1], 4))


def test_geometric_reciprocal():
    # 1/(1-t) = 1 + t + t^2 + ...
    r = series_reciprocal(TruncatedSeries([1, -1], 10))
    assert r.coeffs == tuple([Fraction(1)] * 11)


def test_reciprocal_of_chebyshev_denominator():
    # 1/(1+t+t^2) has period-3 coefficients 1, -1, 0
    r = series_reciprocal(TruncatedSeries([1, 1, 1], 8))
    assert list(r.coeffs) == [1, -1, 0, 1, -1, 0, 1, -1, 0]


def test_reciprocal_singular():
    with pytest.raises(SingularSeriesError):
        series_reciprocal(TruncatedSeries([0, 1], 5))


def test_inv_sqrt_of_one_plus_t_plus_t2():
    s = series_inv_sqrt(TruncatedSeries([1, 1, 1], 4))
    assert s[1] == Fraction(-1, 2)
    assert s[2] == Fraction(-1, 8)


def test_power_needs_unit_constant():
    with pytest.raises(UnsupportedNormalizationError):
        series_power(TruncatedSeries([2, 1], 4), Fraction(1, 2))


def test_exp_needs_zero_constant():
    with pytest.raises(UnsupportedNormalizationError):
        series_exp(TruncatedSeries([1, 1], 4))


def test_exp_of_t():
    e = series_exp(TruncatedSeries.variable(12))
    assert e.coeffs == tuple(Fraction(1, factorial(k)) for k in range(13))


def test_derivative_of_polynomial():
    s = TruncatedSeries([1, 2, 3, 4], 3)
    assert series_derivative(s).coeffs == (2, 6, 12)
    assert series_derivative(s, 3).coeffs == (24,)
    with pytest.raises(UsageError):
        series_derivative(s, 4)


def test_coefficient_out_of_range():
    s = TruncatedSeries([1, 2], 3)
    assert series_coefficient(s, 1) == 2
    with pytest.raises(UsageError):
        series_coefficient(s, 4)


def test_polynomial_series_default_order():
    assert polynomial_series([1, 1]).order == DEFAULT_ORDER


def test_scalar_arithmetic():
    s = TruncatedSeries([1, 2], 2)
    assert (2 * s + 1).coeffs == (3, 4, 0)
    assert (s - 1).coeffs == (0, 2, 0)
    assert (s / 2).coeffs == (Fraction(1, 2), 1, 0)
    assert (s**2).coeffs == (1, 4, 4)


def test_evaluate_polynomial_part():
    assert TruncatedSeries([1, 2, 3], 2).evaluate(Fraction(1, 2)) == Fraction(11, 4)


@settings(max_examples=60, deadline=None)
@given(order=orders, tail=st.lists(small_rationals, max_size=6))
def test_reciprocal_roundtrip(order, tail):
    a = _unit_series(order, tail)
    one = series_mul(a, series_reciprocal(a))
    assert one == TruncatedSeries([1], order)


@settings(max_examples=60, deadline=None)
@given(order=orders, tail=st.lists(small_rationals, max_size=5))
def test_inv_sqrt_squared_times_a_is_one(order, tail):
    a = _unit_series(order, tail)
    b = series_inv_sqrt(a)
    assert series_mul(series_mul(b, b), a) == TruncatedSeries([1], order)


@settings(max_examples=60, deadline=None)
@given(order=st.integers(min_value=1, max_value=DEFAULT_ORDER), tail=st.lists(small_rationals, max_size=5))
def test_exp_derivative_property(order, tail):
    # (e^a)' = a' e^a, compared to one order lower
    a = TruncatedSeries([0, *tail], order)
    e = series_exp(a)
    lhs = series_derivative(e)
    rhs = series_mul(series_derivative(a), e.truncate(order - 1))
    assert lhs == rhs


@settings(max_examples=40, deadline=None)
@given(
    order=st.integers(min_value=0, max_value=20),
    c=small_rationals,
    q=st.fractions(min_value=-3, max_value=3, max_denominator=4),
)
def test_power_of_binomial_matches_binomial_series(order, c, q):
    # (1 + c t)^q = sum_k C(q, k) c^k t^k
    s = series_power(TruncatedSeries([1, c], order), q)
    assert s.coeffs == tuple(_binomial(q, k) * c**k for k in range(order + 1))


@settings(max_examples=40, deadline=None)
@given(order=orders, a=st.lists(small_rationals, max_size=5), b=st.lists(small_rationals, max_size=5))
def test_add_and_mul_commute(order, a, b):
    sa, sb = TruncatedSeries(a, order), TruncatedSeries(b, order)
    assert series_add(sa, sb) == series_add(sb, sa)
    assert series_mul(sa, sb) == series_mul(sb, sa)


@settings(max_examples=30, deadline=None)
@given(n=st.integers(min_value=1, max_value=6), order=st.integers(min_value=0, max_value=20))
def test_integer_power_agrees_with_repeated_product(n, order):
    a = TruncatedSeries([1, 1], order)
    assert series_power(a, n).coeffs == tuple(Fraction(comb(n, k)) for k in range(order + 1))
    assert a**n == series_power(a, n)
