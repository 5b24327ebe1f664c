"""Chebyshev, Humbert, Legendre, Gegenbauer and related families.

Every family has an exact closed-form evaluator (ring-generic like the
Hermite ones) and, where the family is a Laplace transform of a Hermite
polynomial, a quadrature route through :func:`laplace_route_eval`.
"""
from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Iterator, Sequence

from .errors import DomainError, UsageError
from .hermite import hermite2_eval, hermite_lacunary_eval, hermite_multivar_eval
from .poly import Poly1D, PolyMulti, PolyXY
from .precision import to_mpf
from .quadrature import QuadratureRule, integrate

__all__ = [
    "FamilyTag",
    "half_integer_gamma",
    "pochhammer",
    "weighted_compositions",
    "chebyshev_u2_eval",
    "chebyshev_u2_poly",
    "humbert_eval",
    "humbert_poly",
    "multivar_u_eval",
    "multivar_u_poly",
    "legendre2_eval",
    "legendre2_poly",
    "legendre_multivar_eval",
    "legendre_multivar_poly",
    "legendre_classical",
    "legendre_classical_poly",
    "u2n_eval",
    "u2n_poly",
    "gegenbauer_eval",
    "gegenbauer_poly",
    "laplace_route_eval",
    "legendre_u2n_integral",
]


@dataclass(frozen=True)
class FamilyTag:
    """Which family ``laplace_route_eval`` should integrate.

    ``kind`` is one of ``chebyshev_u``, ``humbert``, ``multi_u``,
    ``legendre2``, ``gegenbauer``, ``u2``; ``param`` carries m, p or gamma.
    """

    kind: str
    param: object = None

    KINDS = ("chebyshev_u", "humbert", "multi_u", "legendre2", "gegenbauer", "u2")

    def __post_init__(self):
        if self.kind not in self.KINDS:
            raise UsageError(f"unknown family {self.kind!r}")
        if self.kind == "humbert" and (self.param is None or int(self.param) < 2):
            raise UsageError("humbert needs m >= 2")
        if self.kind == "multi_u" and (self.param is None or int(self.param) < 1):
            raise UsageError("multi_u needs p >= 1")
        if self.kind == "gegenbauer" and (self.param is None or Fraction(self.param) <= 0):
            raise DomainError("gegenbauer needs gamma > 0")

    @classmethod
    def chebyshev_u(cls):
        return cls("chebyshev_u")

    @classmethod
    def humbert(cls, m: int):
        return cls("humbert", int(m))

    @classmethod
    def multi_u(cls, p: int):
        return cls("multi_u", int(p))

    @classmethod
    def legendre2(cls):
        return cls("legendre2")

    @classmethod
    def gegenbauer(cls, gamma):
        return cls("gegenbauer", Fraction(gamma))

    @classmethod
    def u2(cls):
        return cls("u2")

    def weight_alpha(self) -> Fraction:
        if self.kind in ("chebyshev_u", "humbert", "multi_u"):
            return Fraction(0)
        if self.kind == "legendre2":
            return Fraction(-1, 2)
        if self.kind == "gegenbauer":
            return Fraction(self.param) - 1
        raise UsageError(f"{self.kind} has no Laplace-type integral representation")


@functools.lru_cache(maxsize=None)
def half_integer_gamma(k: int) -> Fraction:
    """Gamma(k + 1/2) / sqrt(pi) = (2k)! / (4^k k!)."""
    if k < 0:
        raise UsageError(f"k must be >= 0, got {k}")
    return Fraction(factorial(2 * k), 4**k * factorial(k))


def pochhammer(gamma, k: int) -> Fraction:
    """Rising factorial (gamma)_k = gamma (gamma+1) ... (gamma+k-1)."""
    if k < 0:
        raise UsageError(f"k must be >= 0, got {k}")
    gamma = Fraction(gamma)
    out = Fraction(1)
    for i in range(k):
        out *= gamma + i
    return out


def _check_degree(n: int) -> None:
    if n < 0:
        raise UsageError(f"degree must be >= 0, got {n}")


def _check_lacunarity(m: int) -> None:
    if m < 2:
        raise UsageError(f"lacunarity must be >= 2, got {m}")


def _sum_terms(terms, x, y):
    total = 0
    for c, i, j in terms:
        total = total + c * x**i * y**j
    return total


# --- Chebyshev U_n(x, y) and Humbert U_n^(m)(x, y) -------------------------


def humbert_terms(n: int, m: int) -> Iterator[tuple[Fraction, int, int]]:
    for r in range(n // m + 1):
        sign = (-1) ** (n + (m - 1) * r)
        c = Fraction(factorial(n - (m - 1) * r), factorial(n - m * r) * factorial(r))
        yield sign * c, n - m * r, r


def chebyshev_u2_terms(n: int) -> Iterator[tuple[Fraction, int, int]]:
    for r in range(n // 2 + 1):
        c = Fraction(factorial(n - r), factorial(n - 2 * r) * factorial(r))
        yield (-1) ** (n + r) * c, n - 2 * r, r


def chebyshev_u2_eval(n: int, x, y):
    """U_n(x, y) = (-1)^n sum_r (n-r)! x^(n-2r) (-y)^r / ((n-2r)! r!)."""
    _check_degree(n)
    return _sum_terms(chebyshev_u2_terms(n), x, y)


def chebyshev_u2_poly(n: int) -> PolyXY:
    _check_degree(n)
    return PolyXY({(i, j): c for c, i, j in chebyshev_u2_terms(n)})


def humbert_eval(n: int, m: int, x, y):
    _check_degree(n)
    _check_lacunarity(m)
    return _sum_terms(humbert_terms(n, m), x, y)


def humbert_poly(n: int, m: int) -> PolyXY:
    _check_degree(n)
    _check_lacunarity(m)
    return PolyXY({(i, j): c for c, i, j in humbert_terms(n, m)})


# --- p-variable families ------------------------------------------------------


def weighted_compositions(n: int, p: int) -> Iterator[tuple[int, ...]]:
    """All ``(k_1..k_p)`` with ``k_s >= 0`` and ``sum_s s*k_s = n``."""

    def rec(remaining: int, s: int):
        if s == 1:
            yield (remaining,)
            return
        for k in range(remaining // s + 1):
            for rest in rec(remaining - s * k, s - 1):
                yield rest + (k,)

    if p < 1:
        raise UsageError(f"need p >= 1, got {p}")
    yield from rec(n, p)


def _composition_sum(n: int, xs: Sequence, weight) -> object:
    powers = [[1] for _ in xs]
    for s, (x, row) in enumerate(zip(xs, powers), start=1):
        for _ in range(n // s):
            row.append(row[-1] * x)
    total = 0
    for ks in weighted_compositions(n, len(xs)):
        big_k = sum(ks)
        denom = 1
        for k in ks:
            denom *= factorial(k)
        coeff = Fraction(weight(big_k), denom)
        term = -coeff if big_k % 2 else coeff
        for row, k in zip(powers, ks):
            if k:
                term = term * row[k]
        total = total + term
    return total


def multivar_u_eval(n: int, xs: Sequence):
    """U_n^(p..1)(x_1..x_p) in closed form.

    Laplace-transforming the composition expansion of H_n^(p..1)(-s x) term
    by term gives ``sum (-1)^K K! prod x_s^k_s / k_s!`` over weighted
    compositions with ``K = sum k_s``.
    """
    _check_degree(n)
    if not xs:
        raise UsageError("multivar_u_eval needs at least one variable")
    return _composition_sum(n, list(xs), factorial)


def multivar_u_poly(n: int, p: int) -> PolyMulti:
    return multivar_u_eval(n, PolyMulti.generators(p))


def legendre_multivar_eval(n: int, xs: Sequence):
    """Coefficients of ``(1 + sum_s x_s t^s)^(-1/2)`` in closed form."""
    _check_degree(n)
    if not xs:
        raise UsageError("legendre_multivar_eval needs at least one variable")
    return _composition_sum(n, list(xs), half_integer_gamma)


def legendre_multivar_poly(n: int, p: int) -> PolyMulti:
    return legendre_multivar_eval(n, PolyMulti.generators(p))


# --- Legendre -----------------------------------------------------------------


def legendre2_terms(n: int) -> Iterator[tuple[Fraction, int, int]]:
    for r in range(n // 2 + 1):
        c = half_integer_gamma(n - r) / (factorial(n - 2 * r) * factorial(r))
        yield (-1) ** (n + r) * c, n - 2 * r, r


def legendre2_eval(n: int, x, y):
    """Two-variable Legendre P_n(x, y); the 1/sqrt(pi) cancels exactly."""
    _check_degree(n)
    return _sum_terms(legendre2_terms(n), x, y)


def legendre2_poly(n: int) -> PolyXY:
    _check_degree(n)
    return PolyXY({(i, j): c for c, i, j in legendre2_terms(n)})


def legendre_classical(n: int, x):
    """P_n(x) = P_n(-2x, 1)."""
    return legendre2_eval(n, -2 * x, 1)


def legendre_classical_poly(n: int) -> Poly1D:
    _check_degree(n)
    coeffs = [Fraction(0)] * (n + 1)
    for c, i, j in legendre2_terms(n):
        coeffs[i] += c * (-2) ** i
    return Poly1D(coeffs)


# --- 2U_n(alpha, beta) ------------------------------------------------------------


def u2n_terms(n: int) -> Iterator[tuple[Fraction, int, int]]:
    for r in range(n // 2 + 1):
        c = Fraction(1, factorial(n - 2 * r) * factorial(n - r) * factorial(r))
        yield (-1) ** (n + r) * c, n - 2 * r, r


def u2n_eval(n: int, alpha, beta):
    """2U_n(a, b) = (-1)^n sum_r (-1)^r a^(n-2r) b^r / ((n-2r)! (n-r)! r!)."""
    _check_degree(n)
    return _sum_terms(u2n_terms(n), alpha, beta)


def u2n_poly(n: int) -> PolyXY:
    _check_degree(n)
    return PolyXY({(i, j): c for c, i, j in u2n_terms(n)})


# --- Gegenbauer ---------------------------------------------------------------


def _check_gamma(gamma) -> Fraction:
    gamma = Fraction(gamma)
    if gamma <= 0:
        raise DomainError(f"Gegenbauer index must be > 0, got {gamma}")
    return gamma


def gegenbauer_terms(n: int, gamma) -> Iterator[tuple[Fraction, int]]:
    """``(coeff, power)`` pairs of C_n^(gamma)(x).

    Integrating the Hermite representation term by term turns
    ``s^(n-r)`` against ``s^(gamma-1) e^-s / Gamma(gamma)`` into
    ``(gamma)_(n-r)``.
    """
    gamma = _check_gamma(gamma)
    for r in range(n // 2 + 1):
        c = (-1) ** r * pochhammer(gamma, n - r) * 2 ** (n - 2 * r)
        yield c / (factorial(n - 2 * r) * factorial(r)), n - 2 * r


def gegenbauer_eval(n: int, gamma, x):
    _check_degree(n)
    total = 0
    for c, i in gegenbauer_terms(n, gamma):
        total = total + c * x**i
    return total


def gegenbauer_poly(n: int, gamma) -> Poly1D:
    _check_degree(n)
    coeffs = [Fraction(0)] * (n + 1)
    for c, i in gegenbauer_terms(n, gamma):
        coeffs[i] += c
    return Poly1D(coeffs)


# --- quadrature routes --------------------------------------------------------


def _laplace_integrand(tag: FamilyTag, n: int, args: Sequence) -> Poly1D:
    """Hermite integrand of the family's Laplace representation as a polynomial in s."""
    s = Poly1D.x()
    args = [Fraction(a) for a in args]
    if tag.kind in ("chebyshev_u", "legendre2"):
        x, y = args
        return hermite2_eval(n, -x * s, -y * s)
    if tag.kind == "humbert":
        x, y = args
        return hermite_lacunary_eval(n, int(tag.param), -x * s, -y * s)
    if tag.kind == "multi_u":
        if len(args) != int(tag.param):
            raise UsageError(f"multi_u with p={tag.param} needs {tag.param} arguments")
        return hermite_multivar_eval(n, [-a * s for a in args])
    if tag.kind == "gegenbauer":
        (x,) = args
        return hermite2_eval(n, 2 * x * s, -s)
    raise UsageError(f"{tag.kind} has no Laplace-type integral representation")


def laplace_route_eval(tag: FamilyTag, n: int, args: Sequence, rule: QuadratureRule):
    """Evaluate a family through its Laplace-type integral with ``rule``."""
    _check_degree(n)
    expected = tag.weight_alpha()
    if rule.alpha != expected:
        raise UsageError(f"{tag.kind} needs a rule with alpha={expected}, got alpha={rule.alpha}")
    ctx = rule.context
    integrand = _laplace_integrand(tag, n, args)
    coeffs = [to_mpf(c, ctx) for c in integrand.coeffs]

    def f(sv):
        acc = ctx.mpf(0)
        for c in reversed(coeffs):
            acc = acc * sv + c
        return acc

    value = integrate(rule, f) / ctx.factorial(n)
    if tag.kind == "legendre2":
        value /= ctx.sqrt(ctx.pi)
    elif tag.kind == "gegenbauer":
        value /= ctx.gamma(to_mpf(Fraction(tag.param), ctx))
    return value


def legendre_u2n_integral(n: int, x, rule: QuadratureRule):
    """P_n(x) as (-1/2)^n times the integral of e^-s s^n 2U_n(x s, 1)."""
    _check_degree(n)
    if rule.alpha != 0:
        raise UsageError(f"needs a rule with alpha=0, got alpha={rule.alpha}")
    ctx = rule.context
    xv = to_mpf(x, ctx) if isinstance(x, (int, Fraction)) else ctx.mpf(x)
    terms = [(to_mpf(c, ctx), i, j) for c, i, j in u2n_terms(n)]

    def f(sv):
        xs = xv * sv
        return sv**n * sum((c * xs**i for c, i, _ in terms), ctx.mpf(0))

    return integrate(rule, f) * (ctx.mpf(-1) / 2) ** n
