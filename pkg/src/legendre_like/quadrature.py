"""Generalized Gauss-Laguerre quadrature for the weight ``s**alpha * exp(-s)``.

Nodes are seeded from the eigenvalues of the Jacobi matrix in double
precision and then polished by Newton's method on the three-term
recurrence at the working precision plus guard digits. Weights use the
closed form ``Gamma(N+alpha+1) / (N! x_i L_N'(x_i)^2)``.
"""
from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, NamedTuple

import numpy as np

from .errors import DomainError, EvaluationError, UsageError
from .precision import context, default_dps, to_mpf

__all__ = ["DEFAULT_NODES", "QuadratureRule", "GammaEstimate", "build_rule", "integrate", "gamma_check"]

DEFAULT_NODES = 80
_GUARD_DIGITS = 20


@dataclass(frozen=True)
class QuadratureRule:
    alpha: Fraction
    nodes: tuple
    weights: tuple
    dps: int

    @property
    def count(self) -> int:
        return len(self.nodes)

    @property
    def context(self):
        return context(self.dps)


class GammaEstimate(NamedTuple):
    value: object
    reference: object
    deviation: object


def _as_alpha(alpha) -> Fraction:
    try:
        return Fraction(alpha)
    except (TypeError, ValueError):
        return Fraction(str(alpha))


def _laguerre_with_derivative(n: int, alpha, x):
    """Return ``(L_n^alpha(x), d/dx L_n^alpha(x))`` via the recurrence."""
    prev, cur = 1, 1 + alpha - x
    for k in range(1, n):
        prev, cur = cur, ((2 * k + 1 + alpha - x) * cur - (k + alpha) * prev) / (k + 1)
    deriv = (n * cur - (n + alpha) * prev) / x
    return cur, deriv


def _seed_nodes(n: int, alpha: float) -> np.ndarray:
    k = np.arange(n, dtype=float)
    diag = 2 * k + alpha + 1
    off = np.sqrt(k[1:] * (k[1:] + alpha))
    jac = np.diag(diag) + np.diag(off, 1) + np.diag(off, -1)
    return np.linalg.eigvalsh(jac)


@functools.lru_cache(maxsize=64)
def _build(alpha: Fraction, n: int, dps: int) -> QuadratureRule:
    work = context(dps + _GUARD_DIGITS)
    a = to_mpf(alpha, work)
    eps = work.mpf(10) ** (-(dps + _GUARD_DIGITS // 2))
    seeds = _seed_nodes(n, float(alpha))
    nodes, derivs = [], []
    for guess in seeds:
        x = work.mpf(float(guess))
        for _ in range(100):
            val, der = _laguerre_with_derivative(n, a, x)
            step = val / der
            x -= step
            if abs(step) <= eps * abs(x):
                break
        else:
            raise ArithmeticError(f"Newton did not converge for node near {guess}")
        _, der = _laguerre_with_derivative(n, a, x)
        nodes.append(x)
        derivs.append(der)
    for lo, hi in zip(nodes, nodes[1:]):
        if not lo < hi:
            raise ArithmeticError("node polishing collapsed two roots; seeds too poor")
    scale = work.gamma(n + a + 1) / work.factorial(n)
    weights = [scale / (x * d * d) for x, d in zip(nodes, derivs)]
    out = context(dps)
    return QuadratureRule(
        alpha=alpha,
        nodes=tuple(out.mpf(x) for x in nodes),
        weights=tuple(out.mpf(w) for w in weights),
        dps=dps,
    )


def build_rule(alpha=0, N: int = DEFAULT_NODES, dps: int | None = None) -> QuadratureRule:
    """N-point rule exact for ``s**k`` against ``s**alpha e**-s`` up to k = 2N-1."""
    alpha = _as_alpha(alpha)
    if alpha <= -1:
        raise DomainError(f"weight exponent must be > -1, got {alpha}")
    if N < 1:
        raise UsageError(f"need at least one node, got {N}")
    return _build(alpha, int(N), default_dps() if dps is None else int(dps))


def integrate(rule: QuadratureRule, f: Callable) -> object:
    ctx = rule.context
    total = ctx.mpf(0)
    for s, w in zip(rule.nodes, rule.weights):
        v = f(s)
        if not isinstance(v, (int, Fraction)):
            v = ctx.mpf(v)
            if not ctx.isfinite(v):
                raise EvaluationError(f"integrand is not finite at s={ctx.nstr(s, 10)}")
        total += w * v
    return total


def gamma_check(nu, rule: QuadratureRule | None = None) -> GammaEstimate:
    """Estimate Gamma(nu) with ``rule`` and compare against mpmath's gamma."""
    nu = _as_alpha(nu)
    if nu <= 0:
        raise DomainError(f"Gamma integral needs nu > 0, got {nu}")
    if rule is None:
        rule = build_rule(nu - 1)
    ctx = rule.context
    nu_mp = to_mpf(nu, ctx)
    if rule.alpha == nu - 1:
        value = integrate(rule, lambda s: 1)
    elif rule.alpha == 0:
        value = integrate(rule, lambda s: s ** (nu_mp - 1))
    else:
        raise UsageError(f"rule alpha={rule.alpha} matches neither nu-1={nu - 1} nor 0")
    reference = ctx.gamma(nu_mp)
    return GammaEstimate(value, reference, abs(value - reference))
