from fractions import Fraction

import mpmath
import pytest

from legendre_like.errors import UsageError
from legendre_like.hermite import hermite2_eval
from legendre_like.precision import context
from legendre_like.umbral import (
    UmbralRule,
    bessel_j0_derivative_via_u2n,
    bessel_j0_reference,
    bessel_j0_via_u2n,
    five_point_derivative,
    j0_of_two_sqrt,
    theta,
    umbral_b_power,
    umbral_c_power,
    umbral_hermite_eval,
    vacuum_exp_series,
    verify_bessel_derivative,
    verify_bessel_u2n,
    verify_umbral_hermite,
    verify_vacuum_identity,
)


def _mp(q: Fraction):
    ctx = context()
    return ctx.mpf(q.numerator) / q.denominator


def _besselj(nu, z):
    with mpmath.workdps(60):
        return mpmath.besselj(nu, z)


def test_c_power_examples():
    assert umbral_c_power(0) == 1
    assert abs(umbral_c_power(3) - _mp(Fraction(1, 6))) < 1e-45
    assert abs(umbral_c_power(Fraction(1, 2)) - 1.1283791671) < 1e-10
    assert umbral_c_power(-2) == 0


def test_b_power_examples():
    assert umbral_b_power(0) == 1
    assert abs(umbral_b_power(2) - 0.25) < 1e-45
    assert abs(umbral_b_power(5) - _mp(Fraction(1, 14400))) < 1e-45


def test_theta_examples():
    assert theta(0, 5) == 1
    assert theta(1, 5) == 0
    assert theta(2, 1) == 2
    assert theta(4, 2) == 48
    with pytest.raises(UsageError):
        theta(-1, 1)


def test_rules():
    assert UmbralRule.h_hat(2)(4) == 48
    assert abs(UmbralRule.c_hat()(3) - _mp(Fraction(1, 6))) < 1e-45


def test_umbral_hermite_examples():
    assert umbral_hermite_eval(2, 1, 1) == 3
    assert umbral_hermite_eval(1, Fraction(2, 7), 9) == Fraction(2, 7)
    assert umbral_hermite_eval(4, 1, 1) == 25
    for n in range(15):
        assert umbral_hermite_eval(n, Fraction(-1, 2), Fraction(3, 2)) == hermite2_eval(n, Fraction(-1, 2), Fraction(3, 2))


def test_vacuum_series():
    s = vacuum_exp_series(Fraction(1, 3), 6)
    assert s.coeffs == (1, 0, Fraction(1, 3), 0, Fraction(1, 18), 0, Fraction(1, 162))
    assert verify_vacuum_identity(Fraction(-3, 2), 24).passed


@pytest.mark.parametrize("z", [0, 1, 2, Fraction(7, 2), -2])
def test_j0_reference_against_mpmath(z):
    assert abs(bessel_j0_reference(z) - _besselj(0, float(z))) < 1e-15


def test_j0_of_two_sqrt_negative_argument():
    # J0(2 sqrt(-u)) = I0(2 sqrt(u))
    with mpmath.workdps(60):
        expected = mpmath.besseli(0, 2 * mpmath.sqrt(3))
    assert abs(j0_of_two_sqrt(-3) - expected) < 1e-40


def test_bessel_partial_sums():
    ps = bessel_j0_via_u2n(1, 0, 1, 40)
    assert abs(ps.value - 0.2238907791) < 1e-10
    assert ps.deviation <= 1e-12
    assert bessel_j0_via_u2n(Fraction(3, 2), 2, 0, 40).value == 1
    assert abs(bessel_j0_via_u2n(0, 1, 1, 40).value - _besselj(0, 2)) < 1e-12


def test_bessel_derivative_series():
    d1 = bessel_j0_derivative_via_u2n(1, 1, 0, 1, 40)
    assert abs(d1.value + _besselj(1, 2)) < 1e-12
    assert abs(d1.value - -0.5767248078) < 1e-10
    assert bessel_j0_derivative_via_u2n(0, 1, 0, 1, 40).value == bessel_j0_via_u2n(1, 0, 1, 40).value
    assert bessel_j0_derivative_via_u2n(2, 1, 0, 0, 40).value == Fraction(1, 2)


def test_five_point_rule_on_cubic():
    f = lambda x: x**3  # noqa: E731
    assert five_point_derivative(f, Fraction(2), Fraction(1, 10)) == 12


def test_reports():
    assert verify_umbral_hermite(20, 2, -1).passed
    assert verify_bessel_u2n(Fraction(1, 2), -1, 1).passed
    assert verify_bessel_derivative(-1, Fraction(1, 2), 1).passed
