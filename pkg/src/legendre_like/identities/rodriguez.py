"""Rodriguez-type formulas for repeated t-derivatives.

Every check is done at a rational point ``t``. Each side is computed by an
independent route:

* symbolic differentiation (quotient rule, or the polynomial recursion for
  ``exp`` and ``(1+p)^(-1/2)``),
* Taylor expansion of the shifted function ``f(t + u)`` in the series ring,
* the closed-form family polynomial at the transformed arguments.

Where a square root appears, both sides are multiplied by ``sqrt(1+p(t))``
so the comparison stays inside the rationals.
"""
from __future__ import annotations

import functools
from fractions import Fraction
from math import factorial

from ..errors import DomainError, UsageError
from ..fps import TruncatedSeries, series_derivative, series_exp, series_inv_sqrt, series_reciprocal
from ..hermite import hermite_multivar_eval
from ..legendre_family import chebyshev_u2_eval, legendre2_eval, legendre_multivar_eval
from ..poly import Poly1D
from ..report import VerificationReport, exact_report
from .ratfun import RationalFunction1D, ratfun_derivative


def lacunary_p(x, y, m: int) -> Poly1D:
    """p_m(x, y; t) = x t + y t^m."""
    if m < 1:
        raise UsageError(f"lacunarity must be >= 1, got {m}")
    coeffs = [Fraction(0)] * (m + 1)
    coeffs[1] += Fraction(x)
    coeffs[m] += Fraction(y)
    return Poly1D(coeffs)


def _scaled_derivatives(p: Poly1D, t: Fraction, count: int, denom: Fraction = Fraction(1)) -> list[Fraction]:
    """``[p^(s)(t) / (s! * denom) for s = 1..count]``."""
    return [p.derivative(s)(t) / (factorial(s) * denom) for s in range(1, count + 1)]


def _shifted_normalized(one_plus_p: Poly1D, t: Fraction, order: int) -> TruncatedSeries:
    """(1 + p(t+u)) / (1 + p(t)) as a series in u."""
    q = one_plus_p(t)
    return TruncatedSeries((one_plus_p.shift(t) * (1 / q)).coeffs, order)


@functools.lru_cache(maxsize=256)
def _reciprocal_derivative_chain(x: Fraction, y: Fraction, m_max: int) -> tuple[RationalFunction1D, ...]:
    f = RationalFunction1D(Poly1D([1]), 1 + lacunary_p(x, y, 2))
    chain = [f]
    for _ in range(m_max):
        chain.append(ratfun_derivative(chain[-1], 1))
    return tuple(chain)


def verify_rodriguez_chebyshev(m: int, x, y, t) -> VerificationReport:
    """(1+p) d^m/dt^m 1/(1+p) = m! U_m(p'/(1+p), p''/(2(1+p))) with p = x t + y t^2."""
    if m < 0:
        raise UsageError(f"derivative order must be >= 0, got {m}")
    x, y, t = Fraction(x), Fraction(y), Fraction(t)
    p = lacunary_p(x, y, 2)
    q = 1 + p(t)
    if q == 0:
        raise DomainError(f"1 + p(t) vanishes at (x, y, t) = ({x}, {y}, {t})")
    lhs = q * _reciprocal_derivative_chain(x, y, max(m, 6))[m](t)
    a, b = _scaled_derivatives(p, t, 2, q)
    rhs = factorial(m) * chebyshev_u2_eval(m, a, b)
    series = factorial(m) * series_reciprocal(_shifted_normalized(1 + p, t, m))[m]
    routes = {"quotient_rule": lhs, "closed_form": rhs, "shifted_series": series}
    return exact_report("rodriguez-chebyshev", {"m": m, "x": x, "y": y, "t": t}, [(m, routes)])


def _exp_derivative_poly(p: Poly1D, m: int) -> Poly1D:
    """E_m with d^m/dt^m e^p = E_m e^p; E_{k+1} = E_k' + p' E_k."""
    e = Poly1D([1])
    dp = p.derivative()
    for _ in range(m):
        e = e.derivative() + dp * e
    return e


@functools.lru_cache(maxsize=512)
def _rodriguez_hermite_formal(m: int, n: int, x: Fraction, y: Fraction, order: int) -> tuple:
    """Coefficient rows comparing both sides as formal series in t around 0."""
    p = lacunary_p(x, y, n)
    p_series = TruncatedSeries(p.coeffs, order)
    lhs = series_derivative(series_exp(p_series), m)
    out_order = order - m
    args = [TruncatedSeries((p.derivative(s) * Fraction(1, factorial(s))).coeffs, out_order) for s in range(1, n + 1)]
    h = hermite_multivar_eval(m, args)
    if not isinstance(h, TruncatedSeries):
        h = TruncatedSeries([h], out_order)
    rhs = h * series_exp(p_series.truncate(out_order))
    return tuple((f"t^{k}", {"series_lhs": lhs[k], "series_rhs": rhs[k]}) for k in range(out_order + 1))


def verify_rodriguez_hermite(m: int, n: int, x, y, t, order: int = 12) -> VerificationReport:
    """d^m/dt^m e^(p_n) = H_m^(n..1)({p_n^(s)/s!}) e^(p_n), with the e^(p_n) factor divided out."""
    if m < 0:
        raise UsageError(f"derivative order must be >= 0, got {m}")
    if n < 2:
        raise UsageError(f"lacunarity must be >= 2, got {n}")
    if order < m:
        raise UsageError(f"series order {order} below derivative order {m}")
    x, y, t = Fraction(x), Fraction(y), Fraction(t)
    p = lacunary_p(x, y, n)
    symbolic = _exp_derivative_poly(p, m)(t)
    shifted = p.shift(t) - p(t)
    series = factorial(m) * series_exp(TruncatedSeries(shifted.coeffs, m))[m]
    closed = hermite_multivar_eval(m, _scaled_derivatives(p, t, n))
    rows = [("at_t", {"symbolic": symbolic, "shifted_series": series, "closed_form": closed})]
    rows.extend(_rodriguez_hermite_formal(m, n, x, y, order))
    return exact_report("rodriguez-hermite", {"m": m, "n": n, "x": x, "y": y, "t": t, "order": order}, rows)


def _inv_sqrt_derivative_ratio(one_plus_p: Poly1D, m: int, t: Fraction) -> Fraction:
    """d^m (1+p)^(-1/2) times sqrt(1+p), at t.

    With d^k (1+p)^(-1/2) = N_k (1+p)^(-k-1/2) the numerators obey
    N_{k+1} = N_k' (1+p) - (k + 1/2) p' N_k.
    """
    num = Poly1D([1])
    dp = one_plus_p.derivative()
    for k in range(m):
        num = num.derivative() * one_plus_p - (Fraction(2 * k + 1, 2)) * dp * num
    return num(t) / one_plus_p(t) ** m


def _positive_radicand(p: Poly1D, x, y, t) -> Fraction:
    q = 1 + p(t)
    if q <= 0:
        raise DomainError(f"1 + p(t) = {q} is not positive at (x, y, t) = ({x}, {y}, {t})")
    return q


def verify_rodriguez_legendre(m: int, x, y, t) -> VerificationReport:
    """d^m (1+p)^(-1/2) = m! P_m(p'/(1+p), p''/(2!(1+p))) / sqrt(1+p); compared times sqrt(1+p)."""
    if m < 0:
        raise UsageError(f"derivative order must be >= 0, got {m}")
    x, y, t = Fraction(x), Fraction(y), Fraction(t)
    p = lacunary_p(x, y, 2)
    q = _positive_radicand(p, x, y, t)
    symbolic = _inv_sqrt_derivative_ratio(1 + p, m, t)
    series = factorial(m) * series_inv_sqrt(_shifted_normalized(1 + p, t, m))[m]
    a, b = _scaled_derivatives(p, t, 2, q)
    closed = factorial(m) * legendre2_eval(m, a, b)
    routes = {"symbolic": symbolic, "shifted_series": series, "closed_form": closed}
    return exact_report(
        "rodriguez-legendre",
        {"m": m, "x": x, "y": y, "t": t},
        [(m, routes)],
        note="values are d^m/dt^m (1+p)^(-1/2) multiplied by sqrt(1+p(t))",
    )


def verify_rodriguez_legendre_lacunary(n: int, m: int, x, y, t) -> VerificationReport:
    """Lacunary form with p = x t + y t^m and arguments p^(s)/(s!(1+p)), s = 1..n."""
    if n < 0:
        raise UsageError(f"derivative order must be >= 0, got {n}")
    if m < 2:
        raise UsageError(f"lacunarity must be >= 2, got {m}")
    x, y, t = Fraction(x), Fraction(y), Fraction(t)
    p = lacunary_p(x, y, m)
    q = _positive_radicand(p, x, y, t)
    symbolic = _inv_sqrt_derivative_ratio(1 + p, n, t)
    series = factorial(n) * series_inv_sqrt(_shifted_normalized(1 + p, t, n))[n]
    args = _scaled_derivatives(p, t, max(n, 1), q)
    closed = factorial(n) * legendre_multivar_eval(n, args)
    routes = {"symbolic": symbolic, "shifted_series": series, "closed_form": closed}
    return exact_report(
        "rodriguez-legendre-lacunary",
        {"n": n, "m": m, "x": x, "y": y, "t": t},
        [(n, routes)],
        note="values are d^n/dt^n (1+p)^(-1/2) multiplied by sqrt(1+p(t))",
    )
