"""Exact polynomial containers.

``Poly1D`` is dense and univariate (used for t-polynomials and classical
Legendre/Gegenbauer tables). ``PolyMulti`` is a sparse map from exponent
tuples to Fractions; ``PolyXY`` is its two-variable specialisation.

Both support the ring operations the family evaluators use, so calling an
evaluator on the generators (``PolyXY.x()``, ``PolyXY.y()``) yields the
coefficient table of the polynomial.
"""
from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Iterable, Mapping, Sequence

from .errors import UsageError


def _frac(c) -> Fraction:
    return c if isinstance(c, Fraction) else Fraction(c)


def _format_terms(items: Sequence[tuple[Fraction, str]]) -> str:
    """Render ``[(coeff, monomial)]`` as e.g. ``3/8 x^2 - 1/2 y``."""
    if not items:
        return "0"
    out = []
    for k, (c, mono) in enumerate(items):
        a = abs(c)
        body = "" if (mono and a == 1) else str(a)
        if body and mono:
            body += " "
        body += mono
        if k == 0:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append((" - " if c < 0 else " + ") + body)
    return "".join(out)


class Poly1D:
    """Dense univariate polynomial, coefficients low to high."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [_frac(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def x(cls) -> "Poly1D":
        return cls([0, 1])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly1D):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Rational)):
            return self.coeffs == Poly1D([other]).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"Poly1D({[str(c) for c in self.coeffs]})"

    def to_string(self, var: str = "x") -> str:
        items = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c:
                mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
                items.append((c, mono))
        return _format_terms(items)

    __str__ = to_string

    def _lift(self, other) -> "Poly1D | None":
        if isinstance(other, Poly1D):
            return other
        if isinstance(other, (int, Rational)):
            return Poly1D([other])
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        n = max(len(self.coeffs), len(o.coeffs))
        return Poly1D(self[k] + o[k] for k in range(n))

    __radd__ = __add__

    def __neg__(self) -> "Poly1D":
        return Poly1D(-c for c in self.coeffs)

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Rational)):
            c = _frac(other)
            return Poly1D(c * a for a in self.coeffs)
        if not isinstance(other, Poly1D):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return Poly1D()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        out[i + j] += a * b
        return Poly1D(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Poly1D":
        if not isinstance(k, int) or k < 0:
            raise UsageError(f"polynomial power must be a non-negative int, got {k!r}")
        result, base = Poly1D([1]), self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def derivative(self, r: int = 1) -> "Poly1D":
        cs = list(self.coeffs)
        for _ in range(r):
            cs = [i * cs[i] for i in range(1, len(cs))]
        return Poly1D(cs)

    def evaluate(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    __call__ = evaluate

    def evaluate_float(self, x: float) -> float:
        acc = 0.0
        for c in reversed(self.coeffs):
            acc = acc * x + float(c)
        return acc

    def shift(self, t0) -> "Poly1D":
        """Return ``q(u) = p(t0 + u)``."""
        t0 = _frac(t0)
        return self.compose(Poly1D([t0, 1]))

    def compose(self, inner: "Poly1D") -> "Poly1D":
        acc = Poly1D()
        for c in reversed(self.coeffs):
            acc = acc * inner + c
        return acc


class PolyMulti:
    """Sparse polynomial in ``arity`` variables with Fraction coefficients."""

    __slots__ = ("arity", "terms")
    var_names: Sequence[str] | None = None

    def __init__(self, arity: int, terms: Mapping[tuple[int, ...], object] | None = None):
        if arity < 1:
            raise UsageError(f"arity must be >= 1, got {arity}")
        self.arity = arity
        clean: dict[tuple[int, ...], Fraction] = {}
        for exps, c in (terms or {}).items():
            exps = tuple(exps)
            if len(exps) != arity:
                raise UsageError(f"exponent tuple {exps} does not match arity {arity}")
            if any(e < 0 for e in exps):
                raise UsageError(f"negative exponent in {exps}")
            c = _frac(c)
            if c:
                clean[exps] = clean.get(exps, Fraction(0)) + c
                if clean[exps] == 0:
                    del clean[exps]
        self.terms = clean

    def _new(self, terms) -> "PolyMulti":
        if type(self) is PolyMulti:
            return PolyMulti(self.arity, terms)
        return type(self)(terms)

    @classmethod
    def generator(cls, arity: int, index: int) -> "PolyMulti":
        exps = [0] * arity
        exps[index] = 1
        return PolyMulti(arity, {tuple(exps): 1})

    @classmethod
    def generators(cls, arity: int) -> list["PolyMulti"]:
        """Variables ``x1..x_arity`` as polynomials."""
        return [cls.generator(arity, i) for i in range(arity)]

    def is_zero(self) -> bool:
        return not self.terms

    def _lift(self, other):
        if isinstance(other, PolyMulti):
            if other.arity != self.arity:
                raise UsageError(f"arity mismatch: {self.arity} vs {other.arity}")
            return other
        if isinstance(other, (int, Rational)):
            return self._new({(0,) * self.arity: other})
        return None

    def __eq__(self, other) -> bool:
        if isinstance(other, PolyMulti):
            return self.arity == other.arity and self.terms == other.terms
        if isinstance(other, (int, Rational)):
            return self.terms == self._lift(other).terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.arity, frozenset(self.terms.items())))

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        out = dict(self.terms)
        for e, c in o.terms.items():
            out[e] = out.get(e, Fraction(0)) + c
        return self._new(out)

    __radd__ = __add__

    def __neg__(self):
        return self._new({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Rational)):
            c = _frac(other)
            return self._new({e: c * v for e, v in self.terms.items()})
        o = self._lift(other)
        if o is None:
            return NotImplemented
        out: dict[tuple[int, ...], Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in o.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, Fraction(0)) + c1 * c2
        return self._new(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise UsageError(f"polynomial power must be a non-negative int, got {k!r}")
        result, base = self._lift(1), self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def derivative(self, var: int, r: int = 1):
        out = {}
        for e, c in self.terms.items():
            if e[var] < r:
                continue
            f = 1
            for i in range(r):
                f *= e[var] - i
            ne = list(e)
            ne[var] -= r
            out[tuple(ne)] = c * f
        return self._new(out)

    def evaluate(self, values: Sequence):
        if len(values) != self.arity:
            raise UsageError(f"expected {self.arity} values, got {len(values)}")
        total = 0
        for e, c in self.terms.items():
            term = c
            for v, k in zip(values, e):
                if k:
                    term = term * v**k
            total = total + term
        return total

    def evaluate_float(self, values: Sequence[float]) -> float:
        """Horner-style floating evaluation, nested on the first variable."""
        values = [float(v) for v in values]
        if self.arity == 1:
            return Poly1D(
                self.terms.get((k,), 0) for k in range(self.degree(0) + 1)
            ).evaluate_float(values[0])
        by_first: dict[int, dict] = {}
        for e, c in self.terms.items():
            by_first.setdefault(e[0], {})[e[1:]] = c
        inner = {k: PolyMulti(self.arity - 1, t).evaluate_float(values[1:]) for k, t in by_first.items()}
        acc = 0.0
        for k in range(max(by_first, default=0), -1, -1):
            acc = acc * values[0] + inner.get(k, 0.0)
        return acc

    def degree(self, var: int) -> int:
        return max((e[var] for e in self.terms), default=0)

    def sorted_terms(self) -> list[tuple[tuple[int, ...], Fraction]]:
        return sorted(self.terms.items(), key=lambda kv: tuple(-e for e in kv[0]))

    def _names(self) -> Sequence[str]:
        if self.var_names is not None:
            return self.var_names
        if self.arity == 1:
            return ("x",)
        return tuple(f"x{i + 1}" for i in range(self.arity))

    def to_string(self, names: Sequence[str] | None = None) -> str:
        names = names or self._names()
        items = []
        for e, c in self.sorted_terms():
            parts = []
            for name, k in zip(names, e):
                if k == 1:
                    parts.append(name)
                elif k > 1:
                    parts.append(f"{name}^{k}")
            items.append((c, " ".join(parts)))
        return _format_terms(items)

    def __str__(self) -> str:
        return self.to_string()

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.to_string()!r})"


class PolyXY(PolyMulti):
    """Polynomial in ``x`` and ``y``."""

    __slots__ = ()
    var_names = ("x", "y")

    def __init__(self, terms: Mapping[tuple[int, int], object] | None = None):
        super().__init__(2, terms)

    @classmethod
    def x(cls) -> "PolyXY":
        return cls({(1, 0): 1})

    @classmethod
    def y(cls) -> "PolyXY":
        return cls({(0, 1): 1})

    def derivative_x(self, r: int = 1) -> "PolyXY":
        return self.derivative(0, r)

    def __call__(self, x, y):
        return self.evaluate((x, y))

