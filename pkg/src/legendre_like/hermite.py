"""Two-variable, lacunary and multi-variable Hermite polynomials.

The evaluators only use ``+``, ``*`` and integer powers on their arguments,
so the same code evaluates at Fractions, at high-precision floats, at
:class:`~legendre_like.fps.TruncatedSeries` arguments (for the shifted
generating functions) and at polynomial generators (to get coefficient
tables).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Iterator, Sequence

from .errors import UsageError
from .fps import TruncatedSeries, series_coefficient, series_exp
from .poly import PolyMulti, PolyXY
from .report import VerificationReport, exact_report

__all__ = [
    "HermiteParams",
    "hermite2_terms",
    "hermite2_eval",
    "hermite2_poly",
    "hermite_lacunary_eval",
    "hermite_lacunary_poly",
    "hermite_multivar_eval",
    "hermite_multivar_poly",
    "hermite2_genfun_check",
    "heat_operator_apply",
    "euler_dilation_apply",
]


@dataclass(frozen=True)
class HermiteParams:
    n: int
    m: int = 2

    def __post_init__(self):
        if self.n < 0:
            raise UsageError(f"degree must be >= 0, got {self.n}")
        if self.m < 2:
            raise UsageError(f"lacunarity must be >= 2, got {self.m}")


def _check_degree(n: int) -> None:
    if n < 0:
        raise UsageError(f"degree must be >= 0, got {n}")


def _sum_terms(terms, x, y):
    total = 0
    for c, i, j in terms:
        total = total + c * x**i * y**j
    return total


def hermite_lacunary_terms(n: int, m: int) -> Iterator[tuple[int, int, int]]:
    """Yield ``(coeff, i, j)`` for ``coeff * x^i * y^j`` in H_n^(m)."""
    nf = factorial(n)
    for r in range(n // m + 1):
        yield nf // (factorial(n - m * r) * factorial(r)), n - m * r, r


def hermite2_terms(n: int) -> Iterator[tuple[int, int, int]]:
    return hermite_lacunary_terms(n, 2)


def hermite2_eval(n: int, x, y):
    """H_n(x, y) = n! sum_r x^(n-2r) y^r / ((n-2r)! r!)."""
    _check_degree(n)
    return _sum_terms(hermite2_terms(n), x, y)


def hermite2_poly(n: int) -> PolyXY:
    _check_degree(n)
    return PolyXY({(i, j): c for c, i, j in hermite2_terms(n)})


def hermite_lacunary_eval(n: int, m: int, x, y):
    HermiteParams(n, m)
    return _sum_terms(hermite_lacunary_terms(n, m), x, y)


def hermite_lacunary_poly(n: int, m: int) -> PolyXY:
    HermiteParams(n, m)
    return PolyXY({(i, j): c for c, i, j in hermite_lacunary_terms(n, m)})


def hermite_multivar_eval(n: int, xs: Sequence):
    """H_n^(p,p-1,...,1)(x_1..x_p) via the recursion on the number of variables.

    ``H_n^(p..1) = n! sum_r H_{n-pr}^(p-1..1)(x_1..x_{p-1}) x_p^r / ((n-pr)! r!)``
    with ``H_n^(1)(x_1) = x_1^n``.
    """
    _check_degree(n)
    if len(xs) == 0:
        raise UsageError("hermite_multivar_eval needs at least one variable")
    xs = list(xs)
    cache: dict[tuple[int, int], object] = {}

    def rec(k: int, p: int):
        key = (k, p)
        if key in cache:
            return cache[key]
        if p == 1:
            val = xs[0] ** k
        else:
            val = 0
            kf = factorial(k)
            xp_r = 1
            for r in range(k // p + 1):
                c = kf // (factorial(k - p * r) * factorial(r))
                val = val + rec(k - p * r, p - 1) * xp_r * c
                xp_r = xp_r * xs[p - 1]
        cache[key] = val
        return val

    return rec(n, len(xs))


def hermite_multivar_poly(n: int, p: int) -> PolyMulti:
    if p < 1:
        raise UsageError(f"need p >= 1, got {p}")
    return hermite_multivar_eval(n, PolyMulti.generators(p))


def hermite2_genfun_check(x, y, N: int = 16, order: int | None = None) -> VerificationReport:
    """Compare n! [t^n] exp(x t + y t^2) against the closed-form sum for n <= N."""
    x, y = Fraction(x), Fraction(y)
    order = N if order is None else order
    if N > order:
        raise UsageError(f"N={N} exceeds series order {order}")
    gen = series_exp(TruncatedSeries([0, x, y], order))
    rows = []
    for n in range(N + 1):
        rows.append(
            (n, {"closed_form": hermite2_eval(n, x, y), "series": factorial(n) * series_coefficient(gen, n)})
        )
    return exact_report("hermite2-genfun", {"x": x, "y": y, "N": N}, rows)


def heat_operator_apply(n: int, y=None) -> PolyXY:
    """Apply ``exp(y d^2/dx^2)`` to ``x^n``.

    The exponential is summed term by term and stops once the derivative
    vanishes. With ``y=None`` the result keeps ``y`` symbolic; with a rational
    ``y`` it is a polynomial in ``x`` alone (stored with y-exponent 0).
    """
    _check_degree(n)
    terms: dict[tuple[int, int], Fraction] = {}
    for k in range(n // 2 + 1):
        # d^(2k)/dx^(2k) x^n = n!/(n-2k)! x^(n-2k)
        c = Fraction(factorial(n), factorial(n - 2 * k) * factorial(k))
        if y is None:
            terms[(n - 2 * k, k)] = c
        else:
            key = (n - 2 * k, 0)
            terms[key] = terms.get(key, Fraction(0)) + c * Fraction(y) ** k
    return PolyXY(terms)


def euler_dilation_apply(poly: PolyMulti, lam, weights: Sequence[int] = (1, 0)) -> PolyMulti:
    """Apply ``lam ** (w_1 x d/dx + w_2 y d/dy + ...)`` monomial-wise.

    ``x^i y^j`` is an eigenvector with eigenvalue ``w_1 i + w_2 j``. The
    default weights give ``f(x, y) -> f(lam x, y)``; ``(1, 1)`` is the
    homogeneity operator and ``(1, 2)`` gives ``f(lam x, lam^2 y)``.
    """
    lam = Fraction(lam)
    if lam == 0:
        raise UsageError("dilation factor must be non-zero")
    if len(weights) != poly.arity:
        raise UsageError(f"need {poly.arity} weights, got {len(weights)}")
    out = {}
    for e, c in poly.terms.items():
        k = sum(w * a for w, a in zip(weights, e))
        out[e] = c * lam**k
    return poly._new(out)


def hermite_recurrence_next(n: int, x, y, h_n, h_prev):
    """H_{n+1} = x H_n + 2 n y H_{n-1}."""
    return x * h_n + 2 * n * y * h_prev


def hermite_multiplication_rhs(n: int, lam, x, y):
    """sum_r ((lam-1) x)^r C(n, r) H_{n-r}(x, y)."""
    lam = Fraction(lam)
    total = 0
    for r in range(n + 1):
        total = total + comb(n, r) * ((lam - 1) * x) ** r * hermite2_eval(n - r, x, y)
    return total
