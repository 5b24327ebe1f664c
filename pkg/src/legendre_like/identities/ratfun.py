"""Exact rational functions of one variable and their derivatives."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..errors import DomainError, UsageError
from ..poly import Poly1D


@dataclass(frozen=True)
class RationalFunction1D:
    """``numerator / denominator``, kept unreduced."""

    numerator: Poly1D
    denominator: Poly1D

    def __post_init__(self):
        if self.denominator.is_zero():
            raise UsageError("denominator is identically zero")

    def evaluate(self, t) -> Fraction:
        t = Fraction(t)
        den = self.denominator(t)
        if den == 0:
            raise DomainError(f"denominator vanishes at t={t}")
        return Fraction(self.numerator(t)) / den

    __call__ = evaluate


def ratfun_derivative(f: RationalFunction1D, m: int = 1) -> RationalFunction1D:
    """m-th derivative by repeated quotient rule ``(N'D - N D') / D^2``."""
    if m < 0:
        raise UsageError(f"derivative order must be >= 0, got {m}")
    for _ in range(m):
        num, den = f.numerator, f.denominator
        f = RationalFunction1D(num.derivative() * den - num * den.derivative(), den * den)
    return f
