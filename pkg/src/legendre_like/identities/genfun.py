"""Generating functions: plain, shifted (Rainville) and Laplace-route checks."""
from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Sequence

from ..errors import UsageError
from ..fps import (
    DEFAULT_ORDER,
    TruncatedSeries,
    series_exp,
    series_inv_sqrt,
    series_power,
    series_reciprocal,
)
from ..hermite import hermite2_eval, hermite_lacunary_eval, hermite_multivar_eval
from ..legendre_family import (
    FamilyTag,
    chebyshev_u2_eval,
    gegenbauer_eval,
    humbert_eval,
    laplace_route_eval,
    legendre2_eval,
    legendre_classical,
    legendre_u2n_integral,
    multivar_u_eval,
)
from ..poly import Poly1D
from ..quadrature import QuadratureRule, build_rule
from ..report import VerificationReport, exact_report, tolerance_report
from .rodriguez import lacunary_p


def _check_order(N: int) -> None:
    if N < 0:
        raise UsageError(f"order must be >= 0, got {N}")


def _denominator(coeffs: Sequence, N: int) -> TruncatedSeries:
    return TruncatedSeries([1, *coeffs], N)


def _coefficient_rows(series: TruncatedSeries, closed, scale=lambda n: 1):
    return [(n, {"closed_form": closed(n), "series": scale(n) * series[n]}) for n in range(series.order + 1)]


def verify_genfun_hermite_lacunary(m: int, x, y, N: int = 20) -> VerificationReport:
    """n! [t^n] exp(x t + y t^m) = H_n^(m)(x, y)."""
    _check_order(N)
    x, y = Fraction(x), Fraction(y)
    gen = series_exp(TruncatedSeries(lacunary_p(x, y, m).coeffs, N))
    rows = _coefficient_rows(gen, lambda n: hermite_lacunary_eval(n, m, x, y), factorial)
    return exact_report("genfun-hermite-lacunary", {"m": m, "x": x, "y": y, "N": N}, rows)


def verify_genfun_hermite_multivar(xs: Sequence, N: int = 20) -> VerificationReport:
    """n! [t^n] exp(sum_s x_s t^s) = H_n^(p..1)(x_1..x_p)."""
    _check_order(N)
    xs = tuple(Fraction(v) for v in xs)
    gen = series_exp(TruncatedSeries([0, *xs], N))
    rows = _coefficient_rows(gen, lambda n: hermite_multivar_eval(n, xs), factorial)
    return exact_report("genfun-hermite-multivar", {"xs": xs, "N": N}, rows)


def verify_genfun_chebyshev(x, y, N: int = 20) -> VerificationReport:
    """[t^n] 1/(1 + x t + y t^2) = U_n(x, y)."""
    _check_order(N)
    x, y = Fraction(x), Fraction(y)
    gen = series_reciprocal(_denominator([x, y], N))
    rows = _coefficient_rows(gen, lambda n: chebyshev_u2_eval(n, x, y))
    return exact_report("genfun-chebyshev-u", {"x": x, "y": y, "N": N}, rows)


def verify_genfun_humbert(m: int, x, y, N: int = 20) -> VerificationReport:
    """[t^n] 1/(1 + x t + y t^m) = U_n^(m)(x, y)."""
    _check_order(N)
    x, y = Fraction(x), Fraction(y)
    gen = series_reciprocal(TruncatedSeries((1 + lacunary_p(x, y, m)).coeffs, N))
    rows = _coefficient_rows(gen, lambda n: humbert_eval(n, m, x, y))
    return exact_report("genfun-humbert", {"m": m, "x": x, "y": y, "N": N}, rows)


def verify_genfun_multivar_u(xs: Sequence, N: int = 20) -> VerificationReport:
    """[t^n] 1/(1 + sum_s x_s t^s) = U_n^(p..1)(x_1..x_p)."""
    _check_order(N)
    xs = tuple(Fraction(v) for v in xs)
    gen = series_reciprocal(_denominator(xs, N))
    rows = _coefficient_rows(gen, lambda n: multivar_u_eval(n, xs))
    return exact_report("genfun-multivar-u", {"xs": xs, "N": N}, rows)


def verify_genfun_legendre2(x, y, N: int = 20) -> VerificationReport:
    """[t^n] (1 + x t + y t^2)^(-1/2) = P_n(x, y)."""
    _check_order(N)
    x, y = Fraction(x), Fraction(y)
    gen = series_inv_sqrt(_denominator([x, y], N))
    rows = _coefficient_rows(gen, lambda n: legendre2_eval(n, x, y))
    return exact_report("genfun-legendre2", {"x": x, "y": y, "N": N}, rows)


def verify_genfun_gegenbauer(gamma, x, N: int = 20) -> VerificationReport:
    """[t^n] (1 - 2 x t + t^2)^(-gamma) = C_n^(gamma)(x)."""
    _check_order(N)
    gamma, x = Fraction(gamma), Fraction(x)
    gen = series_power(_denominator([-2 * x, 1], N), -gamma)
    rows = _coefficient_rows(gen, lambda n: gegenbauer_eval(n, gamma, x))
    return exact_report("genfun-gegenbauer", {"gamma": gamma, "x": x, "N": N}, rows)


# --- shifted generating functions -------------------------------------------


def verify_shifted_genfun_hermite(l: int, x, y, N: int = 10) -> VerificationReport:
    """sum_n t^n/n! H_{n+l}(x,y) = H_l(x + 2 y t, y) exp(x t + y t^2)."""
    if l < 0:
        raise UsageError(f"shift must be >= 0, got {l}")
    _check_order(N)
    x, y = Fraction(x), Fraction(y)
    first = TruncatedSeries([x, 2 * y], N)
    h_l = hermite2_eval(l, first, y)
    rhs = h_l * series_exp(TruncatedSeries([0, x, y], N))
    rows = [(n, {"lhs": hermite2_eval(n + l, x, y) / factorial(n), "rhs": rhs[n]}) for n in range(N + 1)]
    return exact_report("shifted-genfun-hermite", {"l": l, "x": x, "y": y, "N": N}, rows)


def verify_shifted_genfun_chebyshev(l: int, x, y, N: int = 8) -> VerificationReport:
    """sum_n t^n (n+l)!/n! U_{n+l} = l! U_l((x+2yt)/(1+p), y/(1+p)) / (1+p)."""
    if l < 0:
        raise UsageError(f"shift must be >= 0, got {l}")
    _check_order(N)
    x, y = Fraction(x), Fraction(y)
    recip = series_reciprocal(_denominator([x, y], N))
    a = TruncatedSeries([x, 2 * y], N) * recip
    b = recip * y
    rhs = chebyshev_u2_eval(l, a, b) * recip * factorial(l)
    rows = [
        (n, {"lhs": Fraction(factorial(n + l), factorial(n)) * chebyshev_u2_eval(n + l, x, y), "rhs": rhs[n]})
        for n in range(N + 1)
    ]
    return exact_report("shifted-genfun-chebyshev", {"l": l, "x": x, "y": y, "N": N}, rows)


def _p_derivative_args(p: Poly1D, m: int, N: int, scale: TruncatedSeries | None = None) -> list[TruncatedSeries]:
    """``p^(s)(t)/s!`` for s = 1..m as series, optionally times ``scale``."""
    out = []
    for s in range(1, m + 1):
        arg = TruncatedSeries((p.derivative(s) * Fraction(1, factorial(s))).coeffs, N)
        out.append(arg * scale if scale is not None else arg)
    return out


def verify_rainville_lacunary(l: int, m: int, x, y, N: int = 9) -> VerificationReport:
    """Shifted lacunary generating functions, Hermite form and Chebyshev form.

    Hermite: sum_n t^n/n! H_{n+l}^(m) = H_l^(m..1)({p_m^(s)/s!}) e^(p_m).
    Chebyshev: sum_n t^n (n+l)!/n! U_{n+l}^(m)
    = l! U_l^(m..1)({p_m^(s)/(s!(1+p_m))}) / (1+p_m).
    Both are implemented exactly as written, with all m arguments; rows are
    labelled ``hermite:t^k`` and ``chebyshev:t^k``.
    """
    if l < 0:
        raise UsageError(f"shift must be >= 0, got {l}")
    if m < 2:
        raise UsageError(f"lacunarity must be >= 2, got {m}")
    _check_order(N)
    x, y = Fraction(x), Fraction(y)
    p = lacunary_p(x, y, m)
    p_series = TruncatedSeries(p.coeffs, N)

    h_rhs = hermite_multivar_eval(l, _p_derivative_args(p, m, N)) * series_exp(p_series)
    if not isinstance(h_rhs, TruncatedSeries):
        h_rhs = TruncatedSeries([h_rhs], N)

    recip = series_reciprocal(1 + p_series)
    u_l = multivar_u_eval(l, _p_derivative_args(p, m, N, recip))
    u_rhs = (u_l * recip) * factorial(l)

    rows = []
    for n in range(N + 1):
        lhs = hermite_lacunary_eval(n + l, m, x, y) / factorial(n)
        rows.append((f"hermite:t^{n}", {"lhs": lhs, "rhs": h_rhs[n]}))
    for n in range(N + 1):
        lhs = Fraction(factorial(n + l), factorial(n)) * humbert_eval(n + l, m, x, y)
        rows.append((f"chebyshev:t^{n}", {"lhs": lhs, "rhs": u_rhs[n]}))
    return exact_report("rainville-lacunary", {"l": l, "m": m, "x": x, "y": y, "N": N}, rows)


# --- Laplace routes -----------------------------------------------------------

LAPLACE_REL_TOL = 1e-9


def _exact_for(tag: FamilyTag, n: int, args: Sequence[Fraction]) -> Fraction:
    if tag.kind == "chebyshev_u":
        return chebyshev_u2_eval(n, *args)
    if tag.kind == "humbert":
        return humbert_eval(n, int(tag.param), *args)
    if tag.kind == "multi_u":
        return multivar_u_eval(n, args)
    if tag.kind == "legendre2":
        return legendre2_eval(n, *args)
    if tag.kind == "gegenbauer":
        return gegenbauer_eval(n, tag.param, *args)
    raise UsageError(f"{tag.kind} has no Laplace route")


def verify_laplace_route(
    tag: FamilyTag,
    n: int,
    args: Sequence,
    rule: QuadratureRule | None = None,
    nodes: int = 80,
    tol: float = LAPLACE_REL_TOL,
) -> VerificationReport:
    """|quadrature - exact| <= tol * (1 + |exact|)."""
    args = tuple(Fraction(a) for a in args)
    if rule is None:
        rule = build_rule(tag.weight_alpha(), nodes)
    exact = _exact_for(tag, n, args)
    approx = laplace_route_eval(tag, n, args, rule)
    ctx = rule.context
    rows = [(n, {"exact": ctx.mpf(exact.numerator) / exact.denominator, "quadrature": approx})]
    params = {"family": tag.kind, "family_param": tag.param if tag.param is not None else "", "n": n, "args": args}
    return tolerance_report("laplace-route", params, rows, abs_tol=tol, rel_tol=tol)


def verify_legendre_u2n_integral(
    n: int, x, rule: QuadratureRule | None = None, nodes: int = 80, tol: float = LAPLACE_REL_TOL
) -> VerificationReport:
    """Classical P_n(x) against the (-1/2)^n integral of s^n 2U_n(x s, 1)."""
    x = Fraction(x)
    if rule is None:
        rule = build_rule(0, nodes)
    exact = legendre_classical(n, x)
    ctx = rule.context
    rows = [(n, {"exact": ctx.mpf(exact.numerator) / exact.denominator, "quadrature": legendre_u2n_integral(n, x, rule)})]
    return tolerance_report("legendre-u2n-integral", {"n": n, "x": x}, rows, abs_tol=tol, rel_tol=tol)
