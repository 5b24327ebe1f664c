"""Truncated formal power series in one variable over the rationals.

A :class:`TruncatedSeries` of order ``N`` stands for
``c_0 + c_1 t + ... + c_N t^N + O(t^(N+1))``. Every operation is exact and
never reads past the order, which makes this module the oracle the closed
forms elsewhere are checked against.

The module-level functions (``series_add``, ``series_mul`` ...) are the
public operations; the arithmetic dunders delegate to them so series can be
fed into the ring-generic polynomial evaluators.
"""
from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Iterable, Sequence

from .errors import SingularSeriesError, UnsupportedNormalizationError, UsageError

DEFAULT_ORDER = 32

__all__ = [
    "DEFAULT_ORDER",
    "TruncatedSeries",
    "series_add",
    "series_mul",
    "series_reciprocal",
    "series_inv_sqrt",
    "series_power",
    "series_exp",
    "series_derivative",
    "series_coefficient",
]


def _as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"series coefficients must be rational, got {type(value).__name__}")


class TruncatedSeries:
    """Immutable truncated power series with Fraction coefficients."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable, order: int | None = None):
        cs = [_as_fraction(c) for c in coeffs]
        if order is None:
            if not cs:
                raise UsageError("empty coefficient list needs an explicit order")
            order = len(cs) - 1
        if order < 0:
            raise UsageError(f"order must be non-negative, got {order}")
        if len(cs) > order + 1:
            cs = cs[: order + 1]
        else:
            cs.extend([Fraction(0)] * (order + 1 - len(cs)))
        self._coeffs = tuple(cs)

    @classmethod
    def constant(cls, value, order: int = DEFAULT_ORDER) -> "TruncatedSeries":
        return cls([value], order)

    @classmethod
    def variable(cls, order: int = DEFAULT_ORDER) -> "TruncatedSeries":
        """The series ``t``."""
        return cls([0, 1], order)

    @classmethod
    def monomial(cls, coeff, power: int, order: int = DEFAULT_ORDER) -> "TruncatedSeries":
        if power > order:
            return cls([], order)
        return cls([0] * power + [coeff], order)

    @property
    def order(self) -> int:
        return len(self._coeffs) - 1

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._coeffs

    def __len__(self) -> int:
        return len(self._coeffs)

    def __getitem__(self, k):
        return self._coeffs[k]

    def __iter__(self):
        return iter(self._coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, TruncatedSeries):
            return self._coeffs == other._coeffs
        if isinstance(other, (int, Rational)):
            return self._coeffs == self._lift(other)._coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __repr__(self) -> str:
        return f"TruncatedSeries({[str(c) for c in self._coeffs]}, order={self.order})"

    def __str__(self) -> str:
        parts = []
        for k, c in enumerate(self._coeffs):
            if c == 0:
                continue
            mono = "" if k == 0 else ("t" if k == 1 else f"t^{k}")
            parts.append(f"{c}{'*' + mono if mono else ''}")
        body = " + ".join(parts) if parts else "0"
        return f"{body} + O(t^{self.order + 1})"

    def _lift(self, other) -> "TruncatedSeries":
        if isinstance(other, TruncatedSeries):
            return other
        return TruncatedSeries([other], self.order)

    def __add__(self, other):
        if not isinstance(other, (TruncatedSeries, int, Rational)):
            return NotImplemented
        return series_add(self, self._lift(other))

    __radd__ = __add__

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries([-c for c in self._coeffs], self.order)

    def __sub__(self, other):
        if not isinstance(other, (TruncatedSeries, int, Rational)):
            return NotImplemented
        return series_add(self, -self._lift(other))

    def __rsub__(self, other):
        if not isinstance(other, (int, Rational)):
            return NotImplemented
        return series_add(-self, self._lift(other))

    def __mul__(self, other):
        if isinstance(other, TruncatedSeries):
            return series_mul(self, other)
        if isinstance(other, (int, Rational)):
            c = Fraction(other)
            return TruncatedSeries([c * a for a in self._coeffs], self.order)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, TruncatedSeries):
            return series_mul(self, series_reciprocal(other))
        if isinstance(other, (int, Rational)):
            c = Fraction(other)
            if c == 0:
                raise ZeroDivisionError("series divided by zero scalar")
            return TruncatedSeries([a / c for a in self._coeffs], self.order)
        return NotImplemented

    def __rtruediv__(self, other):
        if not isinstance(other, (int, Rational)):
            return NotImplemented
        return series_reciprocal(self) * other

    def __pow__(self, k: int) -> "TruncatedSeries":
        if not isinstance(k, int) or k < 0:
            raise UsageError(f"series power must be a non-negative int, got {k!r}")
        result = TruncatedSeries([1], self.order)
        base = self
        while k:
            if k & 1:
                result = series_mul(result, base)
            k >>= 1
            if k:
                base = series_mul(base, base)
        return result

    def truncate(self, order: int) -> "TruncatedSeries":
        if order > self.order:
            raise UsageError(f"cannot raise order {self.order} to {order}")
        return TruncatedSeries(self._coeffs, order)

    def evaluate(self, t):
        """Evaluate the stored polynomial part at ``t`` (Horner)."""
        acc = 0
        for c in reversed(self._coeffs):
            acc = acc * t + c
        return acc


def _check_orders(a: TruncatedSeries, b: TruncatedSeries) -> int:
    if a.order != b.order:
        raise UsageError(f"order mismatch: {a.order} vs {b.order}")
    return a.order


def series_add(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    n = _check_orders(a, b)
    return TruncatedSeries([x + y for x, y in zip(a.coeffs, b.coeffs)], n)


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    n = _check_orders(a, b)
    ac, bc = a.coeffs, b.coeffs
    # skip leading zeros of either operand; common for p(t) = x t + y t^m
    a_nz = [i for i, c in enumerate(ac) if c]
    out = [Fraction(0)] * (n + 1)
    for i in a_nz:
        ai = ac[i]
        for j in range(n + 1 - i):
            bj = bc[j]
            if bj:
                out[i + j] += ai * bj
    return TruncatedSeries(out, n)


def series_reciprocal(a: TruncatedSeries) -> TruncatedSeries:
    a0 = a[0]
    if a0 == 0:
        raise SingularSeriesError("reciprocal of a series with zero constant term")
    n = a.order
    inv0 = 1 / a0
    b = [inv0]
    for k in range(1, n + 1):
        s = sum((a[j] * b[k - j] for j in range(1, k + 1) if a[j]), Fraction(0))
        b.append(-s * inv0)
    return TruncatedSeries(b, n)


def series_power(a: TruncatedSeries, q) -> TruncatedSeries:
    """``a**q`` for rational ``q`` and unit constant term.

    Uses the J.C.P. Miller recurrence
    ``k b_k = sum_{j=1..k} ((q+1) j - k) a_j b_{k-j}``.
    """
    if a[0] != 1:
        raise UnsupportedNormalizationError(
            f"rational powers need constant term 1, got {a[0]}"
        )
    q = _as_fraction(q)
    n = a.order
    b = [Fraction(1)]
    for k in range(1, n + 1):
        s = Fraction(0)
        for j in range(1, k + 1):
            if a[j]:
                s += ((q + 1) * j - k) * a[j] * b[k - j]
        b.append(s / k)
    return TruncatedSeries(b, n)


def series_inv_sqrt(a: TruncatedSeries) -> TruncatedSeries:
    return series_power(a, Fraction(-1, 2))


def series_exp(a: TruncatedSeries) -> TruncatedSeries:
    if a[0] != 0:
        raise UnsupportedNormalizationError(
            f"exp needs a zero constant term to stay rational, got {a[0]}"
        )
    n = a.order
    b = [Fraction(1)]
    # from b' = a' b
    for k in range(1, n + 1):
        s = sum((j * a[j] * b[k - j] for j in range(1, k + 1) if a[j]), Fraction(0))
        b.append(s / k)
    return TruncatedSeries(b, n)


def series_derivative(a: TruncatedSeries, k: int = 1) -> TruncatedSeries:
    if k < 0:
        raise UsageError(f"derivative order must be non-negative, got {k}")
    if k > a.order:
        raise UsageError(f"derivative order {k} exceeds series order {a.order}")
    cs = list(a.coeffs)
    for _ in range(k):
        cs = [i * cs[i] for i in range(1, len(cs))]
    return TruncatedSeries(cs, a.order - k)


def series_coefficient(a: TruncatedSeries, n: int) -> Fraction:
    if not 0 <= n <= a.order:
        raise UsageError(f"coefficient index {n} outside 0..{a.order}")
    return a[n]


def polynomial_series(coeffs: Sequence, order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """Series of a polynomial given low-to-high coefficients (truncated if needed)."""
    return TruncatedSeries(coeffs, order)
