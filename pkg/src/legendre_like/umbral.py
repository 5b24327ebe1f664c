"""Umbral evaluation rules and the Bessel J0 expansions built on them.

Umbral operators are never represented symbolically: an expression is first
linearized into powers of the operator, and each power is replaced by the
scalar its vacuum rule assigns.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, factorial
from typing import Callable

from .errors import UsageError
from .fps import TruncatedSeries, series_exp
from .hermite import hermite2_eval
from .legendre_family import u2n_eval
from .precision import context, to_mpf
from .report import VerificationReport, exact_report, tolerance_report

__all__ = [
    "UmbralRule",
    "PartialSum",
    "umbral_c_power",
    "umbral_b_power",
    "theta",
    "umbral_hermite_eval",
    "vacuum_exp_series",
    "bessel_j0_reference",
    "j0_of_two_sqrt",
    "bessel_j0_via_u2n",
    "bessel_j0_derivative_via_u2n",
    "five_point_derivative",
    "verify_umbral_hermite",
    "verify_vacuum_identity",
    "verify_bessel_u2n",
    "verify_bessel_derivative",
]


def umbral_c_power(nu, dps: int | None = None):
    """c^nu acting on its vacuum: 1/Gamma(nu+1), zero at the poles."""
    ctx = context(dps)
    return ctx.rgamma(to_mpf(nu, ctx) + 1)


def umbral_b_power(nu, dps: int | None = None):
    """b^nu acting on its vacuum: 1/Gamma(nu+1)^2."""
    return umbral_c_power(nu, dps) ** 2


def theta(r: int, y) -> Fraction:
    """Hermite vacuum value theta_r: 0 for odd r, y^s (2s)!/s! for r = 2s."""
    if r < 0:
        raise UsageError(f"theta needs r >= 0, got {r}")
    if r % 2:
        return Fraction(0)
    s = r // 2
    return Fraction(y) ** s * Fraction(factorial(2 * s), factorial(s))


@dataclass(frozen=True)
class UmbralRule:
    """A named rule mapping an exponent to the scalar its vacuum yields."""

    name: str
    action: Callable

    def __call__(self, nu):
        return self.action(nu)

    @classmethod
    def c_hat(cls, dps: int | None = None) -> "UmbralRule":
        return cls("c_hat", lambda nu: umbral_c_power(nu, dps))

    @classmethod
    def b_hat(cls, dps: int | None = None) -> "UmbralRule":
        return cls("b_hat", lambda nu: umbral_b_power(nu, dps))

    @classmethod
    def h_hat(cls, y) -> "UmbralRule":
        y = Fraction(y)
        return cls(f"h_hat(y={y})", lambda r: theta(r, y))


def umbral_hermite_eval(n: int, x, y) -> Fraction:
    """(x + h)^n theta_0 expanded binomially, then h^k -> theta_k(y)."""
    if n < 0:
        raise UsageError(f"degree must be >= 0, got {n}")
    x = Fraction(x)
    return sum((comb(n, k) * x ** (n - k) * theta(k, y) for k in range(n + 1)), Fraction(0))


def vacuum_exp_series(y, order: int) -> TruncatedSeries:
    """sum_r t^r/r! h^r theta_0, truncated at ``order``."""
    return TruncatedSeries([theta(r, y) / factorial(r) for r in range(order + 1)], order)


@dataclass(frozen=True)
class PartialSum:
    N: int
    value: object
    terms: tuple = field(repr=False)
    reference: object = None
    deviation: object = None


def j0_of_two_sqrt(u, dps: int | None = None):
    """J0(2 sqrt(u)) = sum_r (-u)^r / (r!)^2, for any real u."""
    base = context(dps)
    u_b = to_mpf(u, base) if isinstance(u, (int, Fraction)) else base.mpf(u)
    # alternating terms peak near e^(2 sqrt|u|); carry enough guard digits
    guard = int(2 * float(abs(u_b)) ** 0.5 / 2.302585) + 10
    ctx = context(base.dps + guard)
    uu = ctx.mpf(u_b)
    eps = ctx.mpf(10) ** (-(base.dps + 5))
    total = ctx.mpf(1)
    term = ctx.mpf(1)
    r = 0
    while True:
        r += 1
        term = term * (-uu) / (r * r)
        total += term
        if r > abs(uu) and abs(term) <= eps * max(abs(total), 1):
            break
    return base.mpf(total)


def bessel_j0_reference(z, dps: int | None = None):
    """J0(z) from its Taylor series, summed past the point the tail is negligible."""
    ctx = context(dps)
    zv = to_mpf(z, ctx) if isinstance(z, (int, Fraction)) else ctx.mpf(z)
    return j0_of_two_sqrt((zv / 2) ** 2, dps=ctx.dps)


def _u2n_cache(alpha: Fraction, beta: Fraction, upto: int) -> list[Fraction]:
    return [u2n_eval(n, alpha, beta) for n in range(upto + 1)]


def _reference_j0(alpha: Fraction, beta: Fraction, xv, ctx):
    u = to_mpf(alpha, ctx) * xv + to_mpf(beta, ctx) * xv**2
    if u >= 0:
        return bessel_j0_reference(2 * ctx.sqrt(u), dps=ctx.dps)
    return j0_of_two_sqrt(u, dps=ctx.dps)


def bessel_j0_via_u2n(alpha, beta, x, N: int = 40, dps: int | None = None) -> PartialSum:
    """Partial sum of sum_n x^n 2U_n(alpha, beta) with its deviation from J0(2 sqrt(alpha x + beta x^2))."""
    if N < 0:
        raise UsageError(f"N must be >= 0, got {N}")
    ctx = context(dps)
    alpha, beta = Fraction(alpha), Fraction(beta)
    xv = to_mpf(x, ctx) if isinstance(x, (int, Fraction)) else ctx.mpf(x)
    coeffs = _u2n_cache(alpha, beta, N)
    terms = tuple(to_mpf(c, ctx) * xv**n for n, c in enumerate(coeffs))
    value = ctx.fsum(terms)
    ref = _reference_j0(alpha, beta, xv, ctx)
    return PartialSum(N, value, terms, ref, abs(value - ref))


def bessel_j0_derivative_via_u2n(m: int, alpha, beta, x, N: int = 40, dps: int | None = None) -> PartialSum:
    """Partial sum of sum_n (n+m)!/n! x^n 2U_{n+m}(alpha, beta)."""
    if m < 0:
        raise UsageError(f"derivative order must be >= 0, got {m}")
    ctx = context(dps)
    alpha, beta = Fraction(alpha), Fraction(beta)
    xv = to_mpf(x, ctx) if isinstance(x, (int, Fraction)) else ctx.mpf(x)
    coeffs = _u2n_cache(alpha, beta, N + m)
    terms = tuple(
        to_mpf(Fraction(factorial(n + m), factorial(n)) * coeffs[n + m], ctx) * xv**n for n in range(N + 1)
    )
    return PartialSum(N, ctx.fsum(terms), terms)


def five_point_derivative(f: Callable, x, h):
    """Central 5-point first derivative, truncation error O(h^4)."""
    return (-f(x + 2 * h) + 8 * f(x + h) - 8 * f(x - h) + f(x - 2 * h)) / (12 * h)


# --- reports ------------------------------------------------------------------


def verify_umbral_hermite(n_max: int, x, y) -> VerificationReport:
    x, y = Fraction(x), Fraction(y)
    rows = [
        (n, {"closed_form": hermite2_eval(n, x, y), "umbral": umbral_hermite_eval(n, x, y)})
        for n in range(n_max + 1)
    ]
    return exact_report("umbral-hermite", {"n_max": n_max, "x": x, "y": y}, rows)


def verify_vacuum_identity(y, order: int = 24) -> VerificationReport:
    y = Fraction(y)
    lhs = vacuum_exp_series(y, order)
    rhs = series_exp(TruncatedSeries([0, 0, y], order))
    rows = [(k, {"vacuum": lhs[k], "exp_y_t2": rhs[k]}) for k in range(order + 1)]
    return exact_report("umbral-vacuum-exp", {"y": y, "order": order}, rows)


def verify_bessel_u2n(alpha, beta, x, N: int = 40, tol: float = 1e-10, dps: int | None = None) -> VerificationReport:
    ps = bessel_j0_via_u2n(alpha, beta, x, N, dps)
    rows = [("J0", {"taylor_reference": ps.reference, "u2n_partial_sum": ps.value})]
    params = {"alpha": Fraction(alpha), "beta": Fraction(beta), "x": x, "N": N}
    return tolerance_report("bessel-j0-u2n", params, rows, abs_tol=tol)


def verify_bessel_derivative(
    alpha, beta, x, N: int = 40, h=Fraction(1, 1000), tol: float = 1e-6, dps: int | None = None
) -> VerificationReport:
    """m=1 derivative series against a 5-point difference of the m=0 partial sum."""
    ctx = context(dps)
    xv = to_mpf(x, ctx) if isinstance(x, (int, Fraction)) else ctx.mpf(x)
    hv = to_mpf(h, ctx) if isinstance(h, (int, Fraction)) else ctx.mpf(h)
    series = bessel_j0_derivative_via_u2n(1, alpha, beta, xv, N, ctx.dps).value
    fd = five_point_derivative(lambda s: bessel_j0_via_u2n(alpha, beta, s, N, ctx.dps).value, xv, hv)
    rows = [("dJ0/dx", {"finite_difference": fd, "derivative_series": series})]
    params = {"alpha": Fraction(alpha), "beta": Fraction(beta), "x": x, "N": N, "h": h}
    return tolerance_report("bessel-j0-derivative", params, rows, abs_tol=tol)
