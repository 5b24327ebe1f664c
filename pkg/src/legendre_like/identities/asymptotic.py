"""Large-degree and large-index limits.

Each check records a deviation per sequence element. A check passes when every
deviation is exactly zero or when the deviations strictly decrease; no rate
is asserted.
"""
from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Sequence

from ..errors import DomainError, UsageError
from ..hermite import hermite2_eval
from ..legendre_family import half_integer_gamma, legendre2_eval, pochhammer
from ..precision import context, to_mpf
from ..quadrature import DEFAULT_NODES, build_rule, integrate
from ..report import VerificationReport


def _monotone_report(identity: str, params: dict, rows: list[tuple], note: str = "") -> VerificationReport:
    """rows: (index, routes, deviation)."""
    devs = [dev for _, _, dev in rows]
    all_zero = all(d == 0 for d in devs)
    decreasing = all(b < a for a, b in zip(devs, devs[1:]))
    details = []
    for i, (index, routes, dev) in enumerate(rows):
        ok = all_zero or i == 0 or dev < devs[i - 1]
        details.append({"index": index, "routes": routes, "deviation": dev, "ok": bool(ok)})
    worst = max(devs, default=Fraction(0))
    return VerificationReport(identity, params, bool(all_zero or decreasing), worst, Fraction(0), tuple(details), note)


def _as_fraction(v) -> Fraction:
    return v if isinstance(v, Fraction) else Fraction(v)


def asymptotic_hermite(x, y, ns: Sequence[int], dps: int | None = None) -> VerificationReport:
    """|H_n(x, y/n^2) / (x^n e^(y/x^2)) - 1| along ``ns``."""
    x, y = _as_fraction(x), _as_fraction(y)
    if x == 0:
        raise DomainError("x = 0 makes x^n e^(y/x^2) undefined")
    ctx = context(dps)
    rows = []
    for n in ns:
        if n < 0:
            raise UsageError(f"degree must be >= 0, got {n}")
        h = hermite2_eval(n, x, y / n**2) if n else Fraction(1)
        if y == 0:
            # e^0 = 1, so the ratio is rational
            dev = abs(h / x**n - 1)
            limit = x**n
        else:
            limit = to_mpf(x, ctx) ** n * ctx.exp(to_mpf(y / x**2, ctx))
            dev = abs(to_mpf(h, ctx) / limit - 1)
        rows.append((n, {"limit": limit, "exact": h}, dev))
    return _monotone_report("asymptotic-hermite", {"x": x, "y": y, "ns": tuple(ns)}, rows)


def asymptotic_legendre(x, y, ns: Sequence[int], nodes: int = DEFAULT_NODES, dps: int | None = None) -> VerificationReport:
    """Relative deviation of P_n(x, y/n^2) from (-x)^n/(sqrt(pi) n!) int e^(-s - y/(x^2 s)) s^(n-1/2) ds.

    The integral uses a generalized Laguerre rule with alpha = n - 1/2, so
    only ``e^(-y/(x^2 s))`` is left to the nodes. At y = 0 the integral is the
    closed Gamma form and the comparison is exact.
    """
    x, y = _as_fraction(x), _as_fraction(y)
    if x == 0:
        raise DomainError("x = 0 makes y/(x^2 s) undefined")
    if y < 0:
        raise DomainError(f"y = {y} < 0: e^(-y/(x^2 s)) blows up at s -> 0")
    ctx = context(dps)
    c = y / x**2
    rows = []
    for n in ns:
        if n < 0:
            raise UsageError(f"degree must be >= 0, got {n}")
        exact = legendre2_eval(n, x, y / n**2) if n else Fraction(1)
        if y == 0:
            limit = (-x) ** n * half_integer_gamma(n) / factorial(n)
            dev = abs(exact - limit) / abs(limit)
        else:
            rule = build_rule(Fraction(2 * n - 1, 2), nodes, ctx.dps)
            cv = to_mpf(c, ctx)
            integral = integrate(rule, lambda s: ctx.exp(-cv / s))
            limit = to_mpf((-x) ** n, ctx) * integral / (ctx.sqrt(ctx.pi) * ctx.factorial(n))
            dev = abs(to_mpf(exact, ctx) / limit - 1)
        rows.append((n, {"integral": limit, "exact": exact}, dev))
    return _monotone_report("asymptotic-legendre", {"x": x, "y": y, "ns": tuple(ns), "nodes": nodes}, rows)


def scaled_gegenbauer(n: int, gamma, x) -> Fraction:
    """gamma^(-n/2) C_n^(gamma)(x/sqrt(gamma)), which is rational in gamma and x."""
    gamma, x = Fraction(gamma), Fraction(x)
    return sum(
        (
            (-1) ** r * pochhammer(gamma, n - r) * (2 * x) ** (n - 2 * r)
            / (gamma ** (n - r) * factorial(n - 2 * r) * factorial(r))
            for r in range(n // 2 + 1)
        ),
        Fraction(0),
    )


def asymptotic_gegenbauer(x, n: int, gammas: Sequence) -> VerificationReport:
    """|gamma^(-n/2) C_n^(gamma)(x/sqrt(gamma)) - H_n(2x, -1)/n!| along ``gammas``."""
    if n < 0:
        raise UsageError(f"degree must be >= 0, got {n}")
    x = _as_fraction(x)
    gammas = [_as_fraction(g) for g in gammas]
    if any(g <= 0 for g in gammas):
        raise DomainError("Gegenbauer index must be > 0")
    if any(b <= a for a, b in zip(gammas, gammas[1:])):
        raise UsageError("gammas must be strictly increasing")
    limit = hermite2_eval(n, 2 * x, -1) / factorial(n)
    rows = []
    for g in gammas:
        value = scaled_gegenbauer(n, g, x)
        rows.append((g, {"limit": limit, "scaled": value}, abs(value - limit)))
    return _monotone_report("asymptotic-gegenbauer", {"x": x, "n": n, "gammas": tuple(gammas)}, rows)
