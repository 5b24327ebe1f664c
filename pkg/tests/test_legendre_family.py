from fractions import Fraction

import mpmath
import pytest
import sympy

from legendre_like.errors import DomainError, UsageError
from legendre_like.legendre_family import (
    FamilyTag,
    chebyshev_u2_eval,
    chebyshev_u2_poly,
    gegenbauer_eval,
    gegenbauer_poly,
    half_integer_gamma,
    humbert_eval,
    humbert_poly,
    laplace_route_eval,
    legendre2_eval,
    legendre2_poly,
    legendre_classical,
    legendre_classical_poly,
    legendre_multivar_eval,
    legendre_u2n_integral,
    multivar_u_eval,
    multivar_u_poly,
    pochhammer,
    u2n_eval,
    u2n_poly,
    weighted_compositions,
)
from legendre_like.poly import PolyMulti, PolyXY
from legendre_like.quadrature import build_rule

SAMPLE = [Fraction(v) for v in ("0", "1", "-1/2", "2", "-3/2", "1/3")]


def _sym(q: Fraction):
    return sympy.Rational(q.numerator, q.denominator)


def _frac(expr) -> Fraction:
    expr = sympy.nsimplify(expr)
    return Fraction(int(expr.p), int(expr.q))


def test_chebyshev_examples():
    assert chebyshev_u2_eval(2, 1, 1) == 0
    assert chebyshev_u2_eval(3, 1, 1) == 1
    assert chebyshev_u2_eval(0, 5, 5) == 1
    x, y = PolyXY.x(), PolyXY.y()
    assert chebyshev_u2_poly(3) == -(x**3) + 2 * x * y


def test_humbert_examples():
    assert humbert_eval(3, 3, 1, 1) == -2
    assert humbert_eval(5, 4, Fraction(2, 3), 0) == Fraction(-2, 3) ** 5
    assert humbert_eval(2, 2, 1, 1) == chebyshev_u2_eval(2, 1, 1)
    x, y = PolyXY.x(), PolyXY.y()
    assert humbert_poly(3, 3) == -(x**3) - y


def test_multivar_u_examples():
    assert multivar_u_eval(3, [1, 1, 1]) == 0
    x1, x2, x3 = PolyMulti.generators(3)
    assert multivar_u_poly(3, 3) == -(x1**3) + 2 * x1 * x2 - x3
    for n in range(8):
        assert multivar_u_eval(n, [Fraction(3, 2)]) == Fraction(-3, 2) ** n
        for x in SAMPLE:
            assert multivar_u_eval(n, [x, Fraction(1, 2)]) == chebyshev_u2_eval(n, x, Fraction(1, 2))


def test_legendre2_examples():
    assert legendre2_eval(1, 1, 1) == Fraction(-1, 2)
    assert legendre2_eval(2, 2, 1) == 1
    assert legendre2_eval(0, 3, 3) == 1
    assert legendre2_poly(2).to_string() == "3/8 x^2 - 1/2 y"


@pytest.mark.parametrize("n", range(10))
def test_legendre_classical_against_sympy(n):
    for x in SAMPLE:
        assert legendre_classical(n, x) == _frac(sympy.legendre(n, _sym(x)))
    assert legendre_classical(n, 1) == 1


def test_legendre_classical_table():
    assert legendre_classical_poly(2).to_string() == "3/2 x^2 - 1/2"


@pytest.mark.parametrize("n", range(10))
def test_chebyshev_second_kind_against_sympy(n):
    # 1/(1 - 2 x t + t^2) is U_n(-2x, 1)
    for x in SAMPLE:
        assert chebyshev_u2_eval(n, -2 * x, 1) == _frac(sympy.chebyshevu(n, _sym(x)))


@pytest.mark.parametrize("gamma", [Fraction(1, 2), Fraction(1), Fraction(3), Fraction(5, 3)])
def test_gegenbauer_against_sympy(gamma):
    for n in range(8):
        for x in SAMPLE:
            assert gegenbauer_eval(n, gamma, x) == _frac(sympy.gegenbauer(n, _sym(gamma), _sym(x)))


def test_gegenbauer_examples():
    assert gegenbauer_eval(1, 1, 3) == 6
    assert gegenbauer_eval(2, 1, 1) == 3
    assert gegenbauer_eval(0, 7, 2) == 1
    assert gegenbauer_poly(2, 1).to_string() == "4 x^2 - 1"
    with pytest.raises(DomainError):
        gegenbauer_eval(2, 0, 1)


def test_gegenbauer_half_is_legendre():
    for n in range(10):
        for x in SAMPLE:
            assert gegenbauer_eval(n, Fraction(1, 2), x) == legendre_classical(n, x)


def test_u2n_examples():
    assert u2n_eval(1, 1, 0) == -1
    assert u2n_eval(2, 2, 1) == 0
    assert u2n_eval(0, 3, 4) == 1
    assert u2n_poly(2).to_string(("alpha", "beta")) == "1/4 alpha^2 - beta"


def test_half_integer_gamma_and_pochhammer():
    for k in range(12):
        expected = mpmath.gamma(k + mpmath.mpf(1) / 2) / mpmath.sqrt(mpmath.pi)
        assert abs(float(half_integer_gamma(k)) - float(expected)) <= 1e-12 * float(expected)
    assert pochhammer(Fraction(1, 2), 3) == Fraction(15, 8)
    assert pochhammer(5, 0) == 1


def test_weighted_compositions():
    comps = sorted(weighted_compositions(4, 2))
    assert comps == [(0, 2), (2, 1), (4, 0)]


def test_legendre_multivar_reduces():
    for n in range(8):
        for x in SAMPLE:
            assert legendre_multivar_eval(n, [x, Fraction(-1, 2)]) == legendre2_eval(n, x, Fraction(-1, 2))


def test_family_tag_alpha():
    assert FamilyTag.chebyshev_u().weight_alpha() == 0
    assert FamilyTag.legendre2().weight_alpha() == Fraction(-1, 2)
    assert FamilyTag.gegenbauer(3).weight_alpha() == 2
    with pytest.raises(UsageError):
        FamilyTag.u2().weight_alpha()


@pytest.fixture(scope="module")
def rules():
    return {a: build_rule(a, 80) for a in (Fraction(0), Fraction(-1, 2))}


def test_laplace_route_examples(rules):
    assert abs(laplace_route_eval(FamilyTag.chebyshev_u(), 2, (1, 1), rules[0])) <= 1e-10
    assert abs(laplace_route_eval(FamilyTag.legendre2(), 1, (1, 1), rules[Fraction(-1, 2)]) + 0.5) <= 1e-10
    assert abs(laplace_route_eval(FamilyTag.gegenbauer(1), 1, (3,), rules[0]) - 6) <= 1e-10
    with pytest.raises(UsageError):
        laplace_route_eval(FamilyTag.legendre2(), 1, (1, 1), rules[0])


def test_u2n_integral_examples(rules):
    rule = rules[0]
    assert abs(legendre_u2n_integral(1, 1, rule) - 1) <= 1e-10
    assert abs(legendre_u2n_integral(0, 5, rule) - 1) <= 1e-10
    assert abs(legendre_u2n_integral(2, 0, rule) + 0.5) <= 1e-10
    with pytest.raises(UsageError):
        legendre_u2n_integral(2, 0, rules[Fraction(-1, 2)])
