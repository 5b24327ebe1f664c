"""Working-precision handling for the floating routes.

All high-precision work goes through :func:`context`, which hands out one
immutable ``mpmath.MPContext`` per digit count. The global ``mpmath.mp`` is
never touched, so the floating routes are safe to run from several threads.
"""
from __future__ import annotations

import functools
import os
from fractions import Fraction

import mpmath

ENV_VAR = "LEGENDRE_LIKE_DPS"
DEFAULT_DPS = 50
MIN_DPS = 30


def default_dps() -> int:
    raw = os.environ.get(ENV_VAR)
    if raw is None or raw.strip() == "":
        return DEFAULT_DPS
    try:
        dps = int(raw)
    except ValueError:
        raise ValueError(f"{ENV_VAR} must be an integer, got {raw!r}") from None
    if dps < MIN_DPS:
        raise ValueError(f"{ENV_VAR} must be >= {MIN_DPS}, got {dps}")
    return dps


@functools.lru_cache(maxsize=None)
def _context(dps: int) -> mpmath.MPContext:
    ctx = mpmath.MPContext()
    ctx.dps = dps
    return ctx


def context(dps: int | None = None) -> mpmath.MPContext:
    return _context(default_dps() if dps is None else int(dps))


def to_mpf(value, ctx: mpmath.MPContext):
    """Convert an int, Fraction, float, str or mpf into ``ctx`` exactly where possible."""
    if isinstance(value, Fraction):
        return ctx.mpf(value.numerator) / value.denominator
    return ctx.mpf(value)


def is_mpf(value) -> bool:
    return isinstance(value, mpmath.ctx_mp_python._mpf)
