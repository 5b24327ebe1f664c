"""Scaling, multiplication and operational identities.

Derivatives are always taken on exact coefficient tables, never by
differencing.
"""
from __future__ import annotations

import functools
from fractions import Fraction
from math import comb, factorial

from ..errors import DomainError, UsageError
from ..hermite import euler_dilation_apply, heat_operator_apply, hermite2_eval, hermite2_poly
from ..legendre_family import (
    gegenbauer_eval,
    gegenbauer_poly,
    half_integer_gamma,
    legendre2_eval,
    legendre2_poly,
    legendre_classical,
    legendre_classical_poly,
)
from ..poly import PolyXY
from ..report import VerificationReport, exact_report

_legendre2_poly = functools.lru_cache(maxsize=None)(legendre2_poly)
_legendre_classical_poly = functools.lru_cache(maxsize=None)(legendre_classical_poly)
_hermite2_poly = functools.lru_cache(maxsize=None)(hermite2_poly)


@functools.lru_cache(maxsize=None)
def _gegenbauer_poly(n: int, gamma: Fraction):
    return gegenbauer_poly(n, gamma)


def _nonzero_lambda(lam) -> Fraction:
    lam = Fraction(lam)
    if lam == 0:
        raise DomainError("lambda = 0 makes lambda^(n-2r) undefined")
    return lam


def legendre_scaling_classical(n: int, lam, x) -> VerificationReport:
    """P_n(lam x) = sum_r (lam-1)^r / r! x^r P_n^(r)(x)."""
    if n < 0:
        raise UsageError(f"degree must be >= 0, got {n}")
    lam, x = Fraction(lam), Fraction(x)
    table = _legendre_classical_poly(n)
    rhs = sum(
        ((lam - 1) ** r / factorial(r) * x**r * table.derivative(r)(x) for r in range(n + 1)),
        Fraction(0),
    )
    rows = [(n, {"lhs": legendre_classical(n, lam * x), "rhs": rhs})]
    return exact_report("legendre-scaling-classical", {"n": n, "lambda": lam, "x": x}, rows)


def legendre_scaling_2var(n: int, lam, x, y) -> VerificationReport:
    """P_n(lam x, y) = sum_r y^r/r! (1-lam^2)^r lam^(n-2r) d_x^r P_{n-r}(x, y)."""
    if n < 0:
        raise UsageError(f"degree must be >= 0, got {n}")
    lam = _nonzero_lambda(lam)
    x, y = Fraction(x), Fraction(y)
    rhs = Fraction(0)
    for r in range(n + 1):
        deriv = _legendre2_poly(n - r).derivative_x(r)
        if deriv.is_zero():
            continue
        rhs += y**r / factorial(r) * (1 - lam**2) ** r * lam ** (n - 2 * r) * deriv(x, y)
    rows = [(n, {"lhs": legendre2_eval(n, lam * x, y), "rhs": rhs})]
    return exact_report("legendre-scaling-2var", {"n": n, "lambda": lam, "x": x, "y": y}, rows)


def gegenbauer_scaling(n: int, gamma, lam, x) -> VerificationReport:
    """C_n(lam x) = sum_r (lam^2-1)^r lam^(n-2r) / (r! 2^r) d_x^r C_{n-r}(x)."""
    if n < 0:
        raise UsageError(f"degree must be >= 0, got {n}")
    gamma = Fraction(gamma)
    if gamma <= 0:
        raise DomainError(f"Gegenbauer index must be > 0, got {gamma}")
    lam = _nonzero_lambda(lam)
    x = Fraction(x)
    rhs = Fraction(0)
    for r in range(n + 1):
        deriv = _gegenbauer_poly(n - r, gamma).derivative(r)
        if deriv.is_zero():
            continue
        rhs += (lam**2 - 1) ** r * lam ** (n - 2 * r) / (factorial(r) * 2**r) * deriv(x)
    rows = [(n, {"lhs": gegenbauer_eval(n, gamma, lam * x), "rhs": rhs})]
    return exact_report("gegenbauer-scaling", {"n": n, "gamma": gamma, "lambda": lam, "x": x}, rows)


def _gamma_operator(poly: PolyXY, n: int) -> PolyXY:
    """Apply (-1)^E Gamma(1/2 + E) / (sqrt(pi) n!) with E = x d/dx + y d/dy.

    ``x^i y^j`` has eigenvalue ``k = i + j``, so the operator multiplies it by
    ``(-1)^k Gamma(k + 1/2) / (sqrt(pi) n!)``.
    """
    out = {}
    for (i, j), c in poly.terms.items():
        k = i + j
        out[(i, j)] = c * (-1) ** k * half_integer_gamma(k) / factorial(n)
    return PolyXY(out)


def dilation_gamma_operator(n: int, x, y) -> VerificationReport:
    """Operational Legendre definition applied to H_n(x, y) and to exp(y d_x^2) x^n."""
    if n < 0:
        raise UsageError(f"degree must be >= 0, got {n}")
    x, y = Fraction(x), Fraction(y)
    from_hermite = _gamma_operator(_hermite2_poly(n), n)
    from_heat = _gamma_operator(heat_operator_apply(n), n)
    rows = [
        (
            n,
            {
                "closed_form": legendre2_eval(n, x, y),
                "operator_on_hermite": from_hermite(x, y),
                "operator_on_heat": from_heat(x, y),
            },
        )
    ]
    if from_hermite != _legendre2_poly(n):
        rows.append(("table", {"closed_form": Fraction(0), "operator_on_hermite": Fraction(1)}))
    return exact_report("operational-legendre", {"n": n, "x": x, "y": y}, rows)


# --- Hermite properties -----------------------------------------------------------


def verify_hermite_dilatation(n: int, a) -> VerificationReport:
    """a^n H_n(x, y) = H_n(a x, a^2 y) as a polynomial identity."""
    a = Fraction(a)
    h = _hermite2_poly(n)
    lhs = h * a**n
    rhs = euler_dilation_apply(h, a, (1, 2))
    return _table_report("hermite-dilatation", {"n": n, "a": a}, lhs, rhs)


def verify_hermite_repeated_derivative(n: int, r: int) -> VerificationReport:
    """d_x^r H_n = n!/(n-r)! H_{n-r}, on coefficient tables."""
    if not 0 <= r <= n:
        raise UsageError(f"need 0 <= r <= n, got r={r}, n={n}")
    lhs = _hermite2_poly(n).derivative_x(r)
    rhs = _hermite2_poly(n - r) * Fraction(factorial(n), factorial(n - r))
    return _table_report("hermite-repeated-derivative", {"n": n, "r": r}, lhs, rhs)


def verify_hermite_multiplication(n: int, lam) -> VerificationReport:
    """H_n(lam x, y) = sum_r ((lam-1) x)^r C(n, r) H_{n-r}(x, y)."""
    lam = Fraction(lam)
    lhs = euler_dilation_apply(_hermite2_poly(n), lam) if lam != 0 else hermite2_eval(n, 0, PolyXY.y())
    x = PolyXY.x()
    rhs = PolyXY()
    for r in range(n + 1):
        rhs = rhs + ((lam - 1) * x) ** r * _hermite2_poly(n - r) * comb(n, r)
    return _table_report("hermite-multiplication", {"n": n, "lambda": lam}, lhs, rhs)


def verify_hermite_recurrence(n_max: int, x, y) -> VerificationReport:
    """H_{n+1} = x H_n + 2 n y H_{n-1}, compared with the closed form."""
    x, y = Fraction(x), Fraction(y)
    rows = []
    prev, cur = Fraction(1), x
    for n in range(1, n_max):
        nxt = x * cur + 2 * n * y * prev
        rows.append((n + 1, {"closed_form": hermite2_eval(n + 1, x, y), "recurrence": nxt}))
        prev, cur = cur, nxt
    return exact_report("hermite-recurrence", {"n_max": n_max, "x": x, "y": y}, rows)


def _table_report(identity: str, params: dict, lhs: PolyXY, rhs: PolyXY) -> VerificationReport:
    keys = sorted(set(lhs.terms) | set(rhs.terms), reverse=True)
    rows = [
        (f"x^{i} y^{j}", {"lhs": lhs.terms.get((i, j), Fraction(0)), "rhs": rhs.terms.get((i, j), Fraction(0))})
        for i, j in keys
    ]
    return exact_report(identity, params, rows)
