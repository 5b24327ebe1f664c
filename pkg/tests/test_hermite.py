from fractions import Fraction

import pytest
import sympy

from legendre_like.errors import UsageError
from legendre_like.fps import TruncatedSeries
from legendre_like.hermite import (
    HermiteParams,
    euler_dilation_apply,
    heat_operator_apply,
    hermite2_eval,
    hermite2_genfun_check,
    hermite2_poly,
    hermite_lacunary_eval,
    hermite_lacunary_poly,
    hermite_multivar_eval,
    hermite_multivar_poly,
    hermite_multiplication_rhs,
    hermite_recurrence_next,
)
from legendre_like.poly import PolyMulti, PolyXY

X, Y, T = sympy.symbols("x y t")


def _sympy_table(expr, n):
    """n! [t^n] of a generating function, as a sympy polynomial."""
    return sympy.expand(sympy.diff(expr, T, n).subs(T, 0))


def _to_sympy(poly: PolyXY):
    return sympy.expand(sum(sympy.Rational(c.numerator, c.denominator) * X**i * Y**j for (i, j), c in poly.terms.items()))


@pytest.mark.parametrize(
    "n,x,y,expected",
    [(2, 3, 2, 13), (5, 2, 0, 32), (0, 7, 7, 1), (4, 1, 1, 25)],
)
def test_hermite2_examples(n, x, y, expected):
    assert hermite2_eval(n, x, y) == expected


def test_lacunary_examples():
    assert hermite_lacunary_eval(3, 3, 1, 1) == 7
    assert hermite_lacunary_eval(2, 5, Fraction(3, 2), 9) == Fraction(9, 4)
    assert hermite_lacunary_eval(2, 2, 1, 1) == hermite2_eval(2, 1, 1) == 3


def test_multivar_examples():
    assert hermite_multivar_eval(2, [1, 1]) == 3
    assert hermite_multivar_eval(3, [1, 1, 1]) == 13
    assert hermite_multivar_eval(6, [Fraction(-2, 3)]) == Fraction(-2, 3) ** 6
    with pytest.raises(UsageError):
        hermite_multivar_eval(2, [])


@pytest.mark.parametrize("n", range(7))
def test_hermite2_table_against_sympy(n):
    expected = _sympy_table(sympy.exp(X * T + Y * T**2), n)
    assert _to_sympy(hermite2_poly(n)) == expected


@pytest.mark.parametrize("n,m", [(4, 3), (6, 3), (5, 4)])
def test_lacunary_table_against_sympy(n, m):
    expected = _sympy_table(sympy.exp(X * T + Y * T**m), n)
    assert _to_sympy(hermite_lacunary_poly(n, m)) == expected


@pytest.mark.parametrize("n", range(8))
def test_physicists_hermite(n):
    # H_n(2x, -1) is the physicists' Hermite polynomial
    for x in (Fraction(0), Fraction(1, 3), Fraction(-2)):
        expected = sympy.hermite(n, sympy.Rational(x.numerator, x.denominator))
        assert hermite2_eval(n, 2 * x, -1) == Fraction(int(expected.p), int(expected.q))


def test_multivar_table():
    x1, x2, x3 = PolyMulti.generators(3)
    assert hermite_multivar_poly(3, 3) == x1**3 + 6 * x1 * x2 + 6 * x3


def test_params_validation():
    with pytest.raises(UsageError):
        HermiteParams(-1)
    with pytest.raises(UsageError):
        HermiteParams(3, 1)


def test_series_arguments():
    # the evaluator works over the series ring
    t = TruncatedSeries.variable(4)
    h = hermite2_eval(2, 1 + t, Fraction(1))
    assert h.coeffs == (3, 2, 1, 0, 0)


@pytest.mark.parametrize("xy", [(1, 1), (0, 0), (-2, 3)])
def test_genfun_check(xy):
    assert hermite2_genfun_check(*xy, N=16).passed


def test_heat_operator():
    assert heat_operator_apply(2, 1) == PolyXY.x() ** 2 + 2
    assert heat_operator_apply(1, Fraction(5)) == PolyXY.x()
    poly = heat_operator_apply(4, Fraction(1, 2))
    for x in (0, 1, 2):
        assert poly(x, 0) == hermite2_eval(4, x, Fraction(1, 2))
    assert heat_operator_apply(6) == hermite2_poly(6)


def test_euler_dilation():
    x, y = PolyXY.x(), PolyXY.y()
    assert euler_dilation_apply(x**2, 3) == 9 * x**2
    h2 = hermite2_poly(2)
    assert euler_dilation_apply(h2, 1, (1, 1)) == h2
    assert euler_dilation_apply(h2, 2, (1, 1)) == 4 * x**2 + 4 * y
    with pytest.raises(UsageError):
        euler_dilation_apply(h2, 0)


def test_recurrence_and_multiplication_helpers():
    x, y = Fraction(1, 2), Fraction(-3, 2)
    for n in range(1, 10):
        nxt = hermite_recurrence_next(n, x, y, hermite2_eval(n, x, y), hermite2_eval(n - 1, x, y))
        assert nxt == hermite2_eval(n + 1, x, y)
    assert hermite_multiplication_rhs(5, Fraction(2), x, y) == hermite2_eval(5, 2 * x, y)
